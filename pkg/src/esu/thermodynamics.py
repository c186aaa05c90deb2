"""Density-matrix spectrum, entropy and the entropy-minimising solution.

The entropy functional follows the convention Tr(rho log rho) <= 0, so
minimising it is the same as maximising the usual entropy -Tr(rho log rho).
The minimiser among solutions of the semi-classical equations is a Bose
state with coefficients

    a_n = (n+1)^2 / (2 pi^2 a^2 l_n) / (exp(lam m^2/(2 pi^2 a^2 l_n) + beta l_n/a) - 1),

with the multipliers (lam, beta) fixed by the two constraint equations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .exceptions import DomainError, ModeInKernelError, NoSolutionError, SolverFailureError
from .semiclassical import SemiclassicalTargets, SolutionSet, classify, verify_solution
from .spectral import ModelParams
from .states import (
    SymmetricState,
    bose_excess,
    bose_coefficients,
    bose_exponent,
    bose_table,
    lambda_floor,
    mode_table,
)

__all__ = [
    "MinimizerResult",
    "occupation_spectrum",
    "von_neumann_entropy",
    "constraint_sums",
    "solve_entropy_minimizer",
    "kms_temperature_solve",
]

_PI2 = math.pi**2
_MAX_DOUBLINGS = 200
SOLVER_RTOL = 1e-10


@dataclass(frozen=True)
class MinimizerResult:
    """Outcome of :func:`solve_entropy_minimizer`.

    ``lam`` and ``beta`` are None when the solution is not of Bose form
    (the ground state, or the single-mode boundary solution).
    """

    state: SymmetricState
    lam: float | None
    beta: float | None
    residuals: tuple[float, float]
    entropy: float
    diagnostics: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "beta": self.beta,
            "residuals": [self.residuals[0], self.residuals[1]],
            "entropy": self.entropy,
            "state": self.state.to_dict(),
        }


def _nu(params: ModelParams, n, a_n):
    """Mean occupation 2 pi^2 a^2 l_n a_n / (n+1)^2 of each one-particle mode."""
    n = np.asarray(n, dtype=float)
    return 2.0 * _PI2 * params.a**2 * params.l(n) * np.asarray(a_n, dtype=float) / (n + 1.0) ** 2


def occupation_spectrum(state: SymmetricState, params: ModelParams, n: int) -> float:
    """Eigenvalue eps_n = log(((n+1)^2 + 2 pi^2 a^2 l_n a_n) / (2 pi^2 a^2 l_n a_n))."""
    if n < 0:
        raise DomainError("mode index must be non-negative")
    if state.kind in ("kms", "bose"):
        lam = state.lam if state.kind == "bose" else 0.0
        a_n = float(bose_coefficients(params, lam, state.beta, n))
        if a_n == 0.0:
            # underflow: eps_n is then the exponent itself
            return float(bose_exponent(params, state.beta, n, bose_excess(params, lam, state.beta)))
    else:
        ns, coeffs = mode_table(state, params)
        hit = np.nonzero(ns == n)[0]
        a_n = float(coeffs[hit[0]]) if hit.size else 0.0
    if a_n == 0.0:
        raise ModeInKernelError(f"a_{n} = 0: mode {n} lies in the kernel of the one-particle operator")
    nu = float(_nu(params, n, a_n))
    return math.log1p(1.0 / nu)


def von_neumann_entropy(state: SymmetricState, params: ModelParams) -> float:
    """Tr(rho log rho) = sum_n (n+1)^2 [nu log nu - (1+nu) log(1+nu)], always <= 0."""
    ns, a_n = mode_table(state, params)
    if ns.size == 0:
        return 0.0
    nu = _nu(params, ns, a_n)
    keep = nu > 0
    nu, mult = nu[keep], (ns[keep] + 1.0) ** 2
    terms = mult * (nu * np.log(nu) - (1.0 + nu) * np.log1p(nu))
    return math.fsum(terms)


def _sums_from_excess(params: ModelParams, excess: float | None, beta: float) -> tuple[float, float]:
    n, a_n = bose_table(params, beta, excess)
    l2 = params.l(n) ** 2
    return params.m**2 * math.fsum(a_n), math.fsum(a_n * l2) / params.a**2


def constraint_sums(params: ModelParams, lam: float, beta: float) -> tuple[float, float]:
    """(G1, G2) = (m^2 sum a_n, sum a_n l_n^2 / a^2) over the Bose family at (lam, beta).

    For m = 0 the multiplier ``lam`` drops out and G1 vanishes.
    """
    if not (beta > 0 and math.isfinite(beta)):
        raise DomainError(f"beta must be positive and finite, got {beta}")
    if params.m == 0.0:
        return _sums_from_excess(params, None, beta)
    lam0 = lambda_floor(params, beta)
    if not lam > lam0:
        raise DomainError(f"lambda must exceed lambda_0(beta) = {lam0}, got {lam}")
    return _sums_from_excess(params, lam - lam0, beta)


def _bracket_decreasing(f, target: float, x0: float, what: str):
    """Find lo < hi with f(lo) > target >= f(hi) for f decreasing on (0, inf)."""
    lo = hi = x0
    f_lo = f_hi = f(x0)
    steps = 0
    while f_hi > target:
        lo, f_lo = hi, f_hi
        hi *= 2.0
        f_hi = f(hi)
        steps += 1
        if steps > _MAX_DOUBLINGS:
            raise SolverFailureError(f"no bracket for {what}", diagnostics={"hi": hi, "f": f_hi, "target": target})
    steps = 0
    while f_lo <= target:
        hi, f_hi = lo, f_lo
        lo *= 0.5
        f_lo = f(lo)
        steps += 1
        if steps > _MAX_DOUBLINGS:
            raise SolverFailureError(f"no bracket for {what}", diagnostics={"lo": lo, "f": f_lo, "target": target})
    return lo, hi


def _solve_decreasing(f, target: float, what: str, x0: float = 1.0) -> float:
    """Root of f(x) = target for f strictly decreasing on (0, inf), bisected in log x."""
    lo, hi = _bracket_decreasing(f, target, x0, what)
    if lo == hi:
        return lo
    g = lambda u: f(math.exp(u)) - target
    u = brentq(g, math.log(lo), math.log(hi), xtol=1e-15, rtol=4.0 * np.finfo(float).eps, maxiter=500)
    return math.exp(u)


def _thermal_g2(params: ModelParams, beta: float) -> float:
    return _sums_from_excess(params, None, beta)[1]


def _tolerance(t: SemiclassicalTargets) -> float:
    return SOLVER_RTOL * max(1.0, abs(t.y1), abs(t.y2))


def kms_temperature_solve(t: SemiclassicalTargets) -> float | None:
    """The unique beta whose KMS state solves both equations, or None if there is none."""
    if not t.y2 > 0.0:
        return None
    p = t.params
    try:
        beta = _solve_decreasing(lambda b: _thermal_g2(p, b), t.y2, "KMS temperature")
    except SolverFailureError:
        return None
    r1, r2 = verify_solution(SymmetricState.kms(beta), t)
    tol = _tolerance(t)
    if abs(r1) <= tol and abs(r2) <= tol:
        return beta
    return None


def _finish(state: SymmetricState, t: SemiclassicalTargets, lam, beta, diagnostics=None) -> MinimizerResult:
    r1, r2 = verify_solution(state, t)
    tol = _tolerance(t)
    diag = dict(diagnostics or {}, tolerance=tol)
    if not (abs(r1) <= tol and abs(r2) <= tol):
        diag.update(r1=r1, r2=r2, lam=lam, beta=beta)
        raise SolverFailureError("entropy minimiser missed the constraint tolerance", diagnostics=diag)
    return MinimizerResult(state, lam, beta, (r1, r2), von_neumann_entropy(state, t.params), diag)


def solve_entropy_minimizer(t: SemiclassicalTargets) -> MinimizerResult:
    """Solution of the semi-classical equations minimising Tr(rho log rho).

    For m > 0 the multipliers are found by nested monotone bisection: for
    each beta the inner solve fixes lam from G1 = Y1 (G1 decreases in lam
    and diverges at lambda_0(beta)), and the outer solve fixes beta from
    G2 = Y2, which decreases in beta along that curve.
    """
    cls = classify(t)
    p = t.params
    if cls.qf is SolutionSet.EMPTY:
        raise NoSolutionError("solution set is empty")
    if cls.qf is SolutionSet.UNIQUE_GROUND:
        return _finish(SymmetricState.ground(), t, None, None)
    if cls.qf is SolutionSet.UNIQUE_NON_GROUND:
        return _finish(SymmetricState.modes({0: t.y1 / p.m**2}), t, None, None)

    if p.m == 0.0:
        beta = _solve_decreasing(lambda b: _thermal_g2(p, b), t.y2, "inverse temperature")
        return _finish(SymmetricState.kms(beta), t, 0.0, beta)

    inner_cache: dict[float, float] = {}

    def excess_for(beta: float) -> float:
        if beta not in inner_cache:
            inner_cache[beta] = _solve_decreasing(
                lambda s: _sums_from_excess(p, s, beta)[0], t.y1, "Lagrange multiplier lambda"
            )
        return inner_cache[beta]

    def g2_on_curve(beta: float) -> float:
        return _sums_from_excess(p, excess_for(beta), beta)[1]

    beta = _solve_decreasing(g2_on_curve, t.y2, "inverse temperature")
    excess = excess_for(beta)
    lam = lambda_floor(p, beta) + excess
    state = SymmetricState.bose(lam, beta)
    return _finish(state, t, lam, beta, {"excess": excess, "inner_solves": len(inner_cache)})
