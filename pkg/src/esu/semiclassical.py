"""Targets Y1, Y2 of the semi-classical Einstein equation and its solution set.

A symmetric quasi-free state with coefficients a_n solves the equations
exactly when

    m^2 sum_n a_n = Y1,        sum_n a_n l_n^2 / a^2 = Y2.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .exceptions import DomainError, NoSolutionError
from .renormalization import EffectiveConstants, effective_constants
from .series import SeriesValue, x1, x2
from .spectral import ModelParams
from .states import SymmetricState, moments

__all__ = [
    "SolutionSet",
    "SemiclassicalTargets",
    "Classification",
    "targets",
    "classify",
    "construct_two_mode",
    "minimal_n_high",
    "verify_solution",
    "scale_transform",
]

_PI2 = math.pi**2
CLASSIFY_RTOL = 1e-12


class SolutionSet(str, enum.Enum):
    EMPTY = "empty"
    UNIQUE_GROUND = "unique_ground"
    UNIQUE_NON_GROUND = "unique_non_ground"
    INFINITE = "infinite"


@dataclass(frozen=True)
class SemiclassicalTargets:
    """Y1, Y2 together with the inputs they came from.

    ``scale1``/``scale2`` are the magnitudes of the largest contributions
    to Y1/Y2 and fix the scale of the zero tests in :func:`classify`.
    """

    y1: float
    y2: float
    eff: EffectiveConstants
    params: ModelParams
    x1: SeriesValue | None = None
    x2: SeriesValue | None = None
    scale1: float = 0.0
    scale2: float = 0.0

    @classmethod
    def from_values(cls, params: ModelParams, y1: float, y2: float) -> "SemiclassicalTargets":
        """Targets with prescribed Y1, Y2 (zero tests are then exact)."""
        y1, y2 = float(y1), float(y2)
        if not (math.isfinite(y1) and math.isfinite(y2)):
            raise DomainError("targets must be finite")
        return cls(y1, y2, effective_constants(params), params, scale1=abs(y1), scale2=abs(y2))

    def to_dict(self) -> dict:
        out = {
            "Y1": self.y1,
            "Y2": self.y2,
            "kappa_eff": self.eff.kappa_eff,
            "Lambda_eff": self.eff.lambda_eff,
            "c_prime": self.eff.c_prime,
            "c1": self.eff.c1,
            "c2": self.eff.c2,
            "c": self.params.c,
            "l0": self.params.l(0),
        }
        for name, sv in (("X1", self.x1), ("X2", self.x2)):
            if sv is not None:
                out[name] = sv.value
                out[name + "_tail_bound"] = float(sv.tail_bound)
                out[name + "_n_used"] = sv.n_used
        return out


@dataclass(frozen=True)
class Classification:
    qf: SolutionSet
    full: SolutionSet
    boundary: bool = False

    def to_dict(self) -> dict:
        return {"qf": self.qf.value, "full": self.full.value, "boundary": self.boundary}


def targets(params: ModelParams, tol: float = 1e-12) -> SemiclassicalTargets:
    """Y1 and Y2 for the given parameters and renormalisation constants."""
    eff = effective_constants(params)
    a, c, m2, R = params.a, params.c, params.m**2, params.R
    X1, X2 = x1(c, tol), x2(c, tol)
    log_term = math.log(0.5 * a * a)
    a4 = a**4
    y1_parts = (
        -8.0 * m2 * a * a * X1.value / (32.0 * _PI2 * a4),
        c * c / (32.0 * _PI2 * a4),
        2.0 * m2 * a * a * c * log_term / (32.0 * _PI2 * a4),
        R / eff.kappa_eff,
        -4.0 * eff.lambda_eff / eff.kappa_eff,
    )
    y2_parts = (
        -16.0 * X2.value / (64.0 * _PI2 * a4),
        2.0 * c * c / (64.0 * _PI2 * a4),
        c * c * log_term / (64.0 * _PI2 * a4),
        R / (2.0 * eff.kappa_eff),
        -eff.lambda_eff / eff.kappa_eff,
        -eff.c_prime * R * R,
    )
    return SemiclassicalTargets(
        y1=math.fsum(y1_parts),
        y2=math.fsum(y2_parts),
        eff=eff,
        params=params,
        x1=X1,
        x2=X2,
        scale1=max(abs(p) for p in y1_parts),
        scale2=max(abs(p) for p in y2_parts),
    )


def _full_from_qf(qf: SolutionSet) -> SolutionSet:
    if qf is SolutionSet.UNIQUE_NON_GROUND:
        # non-quasi-free states with an oscillating one-point function share its two-point data
        return SolutionSet.INFINITE
    return qf


def classify(t: SemiclassicalTargets, rtol: float = CLASSIFY_RTOL) -> Classification:
    """Decide whether the solution set is empty, the ground state alone, or infinite.

    Zero tests use ``|Y| <= rtol * scale``; the equality m^2 Y2 = (m^2 + xi R) Y1
    uses ``rtol`` relative to the larger side.  ``boundary`` is set whenever
    a decision was taken inside the tolerance band, and on the
    unique-non-ground edge.
    """
    p = t.params
    y1, y2 = t.y1, t.y2
    z1 = abs(y1) <= rtol * t.scale1
    z2 = abs(y2) <= rtol * t.scale2
    boundary = (z1 and y1 != 0.0) or (z2 and y2 != 0.0)

    if z1 and z2:
        qf = SolutionSet.UNIQUE_GROUND
    elif p.m == 0.0:
        qf = SolutionSet.INFINITE if (z1 and y2 > 0.0) else SolutionSet.EMPTY
    elif z1 or y1 < 0.0:
        qf = SolutionSet.EMPTY
    else:
        lhs = p.m**2 * y2
        rhs = (p.m**2 + p.xi * p.R) * y1
        diff = lhs - rhs
        if abs(diff) <= rtol * max(abs(lhs), abs(rhs)):
            qf = SolutionSet.UNIQUE_NON_GROUND
            boundary = True
        elif diff > 0.0:
            qf = SolutionSet.INFINITE
        else:
            qf = SolutionSet.EMPTY
    return Classification(qf, _full_from_qf(qf), boundary)


def minimal_n_high(t: SemiclassicalTargets) -> int:
    """Smallest N admitted by :func:`construct_two_mode` (0 when m = 0)."""
    p = t.params
    cls = classify(t)
    if cls.qf is SolutionSet.EMPTY:
        raise NoSolutionError("solution set is empty")
    if p.m == 0.0 or cls.qf is not SolutionSet.INFINITE:
        return 0 if p.m == 0.0 else 1
    need = p.a**2 * p.m**2 * t.y2 / t.y1
    n = max(1, int(math.ceil(math.sqrt(max(need - p.c, 0.0)))) - 1)
    while p.l(n) ** 2 < need:
        n += 1
    while n > 1 and p.l(n - 1) ** 2 >= need:
        n -= 1
    return n


def construct_two_mode(t: SemiclassicalTargets, n_high: int) -> SymmetricState:
    """An explicit solution supported on at most the modes {0, n_high}."""
    p = t.params
    cls = classify(t)
    if cls.qf is SolutionSet.EMPTY:
        raise NoSolutionError("solution set is empty")
    if cls.qf is SolutionSet.UNIQUE_GROUND:
        return SymmetricState.ground()
    a2 = p.a**2
    if p.m == 0.0:
        if n_high < 0:
            raise DomainError("n_high must be non-negative")
        return SymmetricState.modes({n_high: a2 * t.y2 / p.l(n_high) ** 2})
    m2 = p.m**2
    if cls.qf is SolutionSet.UNIQUE_NON_GROUND:
        return SymmetricState.modes({0: t.y1 / m2})
    if n_high < 1:
        raise NoSolutionError("n_high must be at least 1 for the two-mode construction")
    lN2, l02 = p.l(n_high) ** 2, p.l(0) ** 2
    if lN2 * t.y1 / (a2 * m2) < t.y2:
        raise NoSolutionError(
            f"no two-mode solution with N={n_high}; need N >= {minimal_n_high(t)}"
        )
    pref = a2 / (lN2 - l02)
    a0 = max(pref * (lN2 * t.y1 / (a2 * m2) - t.y2), 0.0)
    aN = max(pref * (t.y2 - l02 * t.y1 / (a2 * m2)), 0.0)
    return SymmetricState.modes({0: a0, n_high: aN})


def verify_solution(state: SymmetricState, t: SemiclassicalTargets) -> tuple[float, float]:
    """Residuals (m^2 sum a_n - Y1, sum a_n l_n^2/a^2 - Y2)."""
    sa, sal2 = moments(state, t.params)
    return t.params.m**2 * sa - t.y1, sal2 - t.y2


def scale_transform(t: SemiclassicalTargets, lam: float) -> tuple[float, float]:
    """Targets after a -> lam a with xi, m^2 a^2, Lambda a^2, kappa/a^2 held fixed."""
    if not lam > 0:
        raise DomainError(f"scale factor must be positive, got {lam}")
    p = t.params
    a4 = p.a**4
    log_l = math.log(lam)
    y1 = (t.y1 + p.m**2 * p.a**2 * p.c * log_l / (8.0 * _PI2 * a4)) / lam**4
    y2 = (t.y2 + p.c**2 * log_l / (32.0 * _PI2 * a4)) / lam**4
    return y1, y2
