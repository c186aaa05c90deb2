import math

import pytest

from esu import ModelParams


def params_with_c(c, a=1.0, m=0.0, **kw):
    """ModelParams with the given c, choosing xi to absorb m^2 a^2."""
    xi = (c + 1.0 - m * m * a * a) / 6.0
    return ModelParams(a=a, m=m, xi=xi, **kw)


@pytest.fixture
def conformal():
    return ModelParams(a=1.0, Lambda=0.0, m=0.0, xi=1.0 / 6.0, kappa=1.0)


PI2 = math.pi**2


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
