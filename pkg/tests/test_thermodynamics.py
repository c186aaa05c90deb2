import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from esu import (
    DomainError,
    ModeInKernelError,
    ModelParams,
    NoSolutionError,
    SemiclassicalTargets,
    SymmetricState,
    constraint_sums,
    construct_two_mode,
    kms_coefficient,
    kms_temperature_solve,
    mode_table,
    occupation_spectrum,
    solve_entropy_minimizer,
    verify_solution,
    von_neumann_entropy,
)
from esu.states import bose_exponent, lambda_floor

from conftest import params_with_c

PI2 = math.pi**2
MASSIVE = ModelParams(a=1.0, m=1.0, xi=0.0)


def thermal_oracle(eps, mult):
    """Tr(rho log rho) of independent Bose modes with energies eps: sum of -eps x/(1-x) + log(1-x)."""
    x = np.exp(-eps)
    return math.fsum(mult * (-eps * x / (1 - x))) + math.fsum(mult * np.log1p(-x))


@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0])
def test_kms_occupation_is_beta_l(beta):
    p = params_with_c(0.8, a=1.3)
    s = SymmetricState.kms(beta)
    for n in range(101):
        assert occupation_spectrum(s, p, n) == pytest.approx(beta * p.l(n) / p.a, rel=1e-12)


def test_occupation_examples():
    p = params_with_c(0.0)
    assert occupation_spectrum(SymmetricState.modes({0: 1 / (2 * PI2)}), p, 0) == pytest.approx(math.log(2))
    big = occupation_spectrum(SymmetricState.modes({0: 1e12}), p, 0)
    assert 0 < big < 1e-11
    with pytest.raises(ModeInKernelError):
        occupation_spectrum(SymmetricState.modes({0: 1.0}), p, 1)
    with pytest.raises(ModeInKernelError):
        occupation_spectrum(SymmetricState.ground(), p, 0)


def test_entropy_ground_is_zero():
    assert von_neumann_entropy(SymmetricState.ground(), MASSIVE) == 0.0


@pytest.mark.parametrize("a0", [1e-6, 0.01, 1.0, 50.0])
def test_single_mode_entropy_matches_partition_function(a0):
    p = params_with_c(0.5, a=1.7)
    s = SymmetricState.modes({0: a0})
    eps = occupation_spectrum(s, p, 0)
    assert von_neumann_entropy(s, p) == pytest.approx(thermal_oracle(np.array([eps]), np.array([1.0])), rel=1e-12)


def test_kms_entropy_matches_thermal_sum():
    p = params_with_c(0.0)
    k = np.arange(1.0, 200.0)
    assert von_neumann_entropy(SymmetricState.kms(1.0), p) == pytest.approx(thermal_oracle(k, k * k), abs=1e-10)


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.integers(0, 40), st.floats(0.0, 1e3), max_size=6))
def test_entropy_non_positive(coeffs):
    assert von_neumann_entropy(SymmetricState.modes(coeffs), MASSIVE) <= 0.0


def test_constraint_sums_examples():
    p0 = params_with_c(0.0)
    g1, g2 = constraint_sums(p0, 123.0, 1.0)
    assert g1 == 0.0
    k = np.arange(1.0, 200.0)
    assert g2 == pytest.approx(math.fsum(k**3 / (2 * PI2 * np.expm1(k))), rel=1e-14)
    assert constraint_sums(p0, 0.0, 800.0)[1] < 1e-300


def test_constraint_sums_domain():
    with pytest.raises(DomainError):
        constraint_sums(MASSIVE, lambda_floor(MASSIVE, 1.0), 1.0)
    with pytest.raises(DomainError):
        constraint_sums(MASSIVE, 0.0, -1.0)


def test_constraint_sums_are_bose_weighted():
    p = ModelParams(a=1.4, m=0.8, xi=0.05)
    lam, beta = -1.0, 0.7
    n = np.arange(400)
    a_n = (n + 1) ** 2 / (2 * PI2 * p.a**2 * p.l(n)) / np.expm1(lam * p.m**2 / (2 * PI2 * p.a**2 * p.l(n)) + beta * p.l(n) / p.a)
    g1, g2 = constraint_sums(p, lam, beta)
    assert g1 == pytest.approx(p.m**2 * math.fsum(a_n), rel=1e-12)
    assert g2 == pytest.approx(math.fsum(a_n * p.l(n) ** 2) / p.a**2, rel=1e-12)


def test_constraint_sums_strictly_decreasing():
    p = ModelParams(a=1.0, m=1.2, xi=0.1)
    betas = np.linspace(0.3, 3.0, 8)
    for beta in betas:
        lam0 = lambda_floor(p, beta)
        lams = lam0 + np.geomspace(1e-3, 50.0, 10)
        g = np.array([constraint_sums(p, lam, beta) for lam in lams])
        assert np.all(np.diff(g[:, 0]) < 0) and np.all(np.diff(g[:, 1]) < 0)
    for lam in (-1.0, 0.0, 5.0):
        bs = [b for b in np.linspace(0.2, 3.0, 10) if lam > lambda_floor(p, b)]
        g = np.array([constraint_sums(p, lam, b) for b in bs])
        assert np.all(np.diff(g[:, 0]) < 0) and np.all(np.diff(g[:, 1]) < 0)


def test_minimizer_ground_and_empty():
    r = solve_entropy_minimizer(SemiclassicalTargets.from_values(MASSIVE, 0.0, 0.0))
    assert r.state.is_ground and r.entropy == 0.0
    with pytest.raises(NoSolutionError):
        solve_entropy_minimizer(SemiclassicalTargets.from_values(MASSIVE, 1.0, 0.5))


def test_minimizer_boundary_case_is_single_mode():
    t = SemiclassicalTargets.from_values(MASSIVE, 0.4, 0.4)
    r = solve_entropy_minimizer(t)
    assert r.state.coeffs == ((0, 0.4),) and r.lam is None


@pytest.mark.parametrize("beta_star", [0.37, 1.0, 2.9])
def test_massless_roundtrip(beta_star):
    p = params_with_c(0.6, a=1.3)
    y2 = constraint_sums(p, 0.0, beta_star)[1]
    t = SemiclassicalTargets.from_values(p, 0.0, y2)
    r = solve_entropy_minimizer(t)
    assert r.state.kind == "kms"
    assert r.beta == pytest.approx(beta_star, rel=1e-8)
    n = np.arange(51)
    np.testing.assert_allclose(kms_coefficient(p, r.beta, n), kms_coefficient(p, beta_star, n), rtol=1e-8)
    assert kms_temperature_solve(t) == pytest.approx(beta_star, rel=1e-8)


def test_kms_solve_absent_cases():
    assert kms_temperature_solve(SemiclassicalTargets.from_values(params_with_c(0.0), 0.0, -1.0)) is None
    assert kms_temperature_solve(SemiclassicalTargets.from_values(params_with_c(0.0), 0.0, 0.0)) is None
    assert kms_temperature_solve(SemiclassicalTargets.from_values(MASSIVE, 0.1, 0.5)) is None


def test_kms_solve_on_kms_curve_massive():
    p = ModelParams(a=1.1, m=0.9, xi=0.05)
    g1, g2 = constraint_sums(p, 0.0, 1.7)
    t = SemiclassicalTargets.from_values(p, g1, g2)
    assert kms_temperature_solve(t) == pytest.approx(1.7, rel=1e-8)
    r = solve_entropy_minimizer(t)
    assert r.beta == pytest.approx(1.7, rel=1e-7)
    assert r.lam == pytest.approx(0.0, abs=1e-6)


def test_massive_minimizer_beats_two_mode_solutions():
    t = SemiclassicalTargets.from_values(MASSIVE, 0.1, 0.5)
    r = solve_entropy_minimizer(t)
    tol = 1e-10 * max(1.0, 0.1, 0.5)
    assert abs(r.residuals[0]) <= tol and abs(r.residuals[1]) <= tol
    assert r.entropy <= 0
    for n in range(2, 21):
        competitor = construct_two_mode(t, n)
        assert r.entropy <= von_neumann_entropy(competitor, MASSIVE)


def test_minimizer_has_bose_form():
    p = ModelParams(a=0.8, m=1.5, xi=0.1)
    t = SemiclassicalTargets.from_values(p, 0.3, 3.0)
    r = solve_entropy_minimizer(t)
    g1, g2 = constraint_sums(p, r.lam, r.beta)
    assert g1 == pytest.approx(0.3, abs=1e-10) and g2 == pytest.approx(3.0, abs=1e-10)
    excess = r.lam - lambda_floor(p, r.beta)
    for n in range(30):
        assert occupation_spectrum(r.state, p, n) == pytest.approx(float(bose_exponent(p, r.beta, n, excess)), rel=1e-9)


def test_minimizer_is_locally_optimal():
    p = MASSIVE
    t = SemiclassicalTargets.from_values(p, 0.1, 0.5)
    r = solve_entropy_minimizer(t)
    n, a_n = mode_table(r.state, p)
    base = dict(zip(n.tolist(), a_n.tolist()))
    s0 = von_neumann_entropy(SymmetricState.modes(base), p)
    l2 = p.l(np.arange(len(n))) ** 2
    for i, j, k in ((0, 1, 2), (0, 2, 5), (1, 3, 6), (0, 4, 9)):
        # direction d with sum d = 0 and sum d l^2 = 0
        d = np.cross([1.0, 1.0, 1.0], [l2[i], l2[j], l2[k]])
        d /= np.max(np.abs(d))
        for step in (1e-4, -1e-4):
            h = step * min(base[i], base[j], base[k])
            moved = dict(base)
            for idx, di in zip((i, j, k), d):
                moved[idx] = base[idx] + h * di
            assert von_neumann_entropy(SymmetricState.modes(moved), p) >= s0 - 1e-8


def test_result_json():
    r = solve_entropy_minimizer(SemiclassicalTargets.from_values(MASSIVE, 0.1, 0.5))
    d = r.to_dict()
    assert set(d) == {"lambda", "beta", "residuals", "entropy", "state"}
    assert d["state"]["kind"] == "bose" and len(d["residuals"]) == 2
