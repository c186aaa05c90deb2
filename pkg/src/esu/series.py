"""Certified evaluation of the ground-state renormalisation series X1 and X2.

Both series have summands decaying like (n+1)^-3.  We sum the exact
summands up to an adaptive index N and add the Hurwitz-zeta sum of the
large-n expansion beyond N.  The reported ``tail_bound`` covers the
truncated expansion remainder plus floating-point rounding.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import binom, zeta

from .exceptions import DomainError
from .spectral import ModelParams

__all__ = ["SeriesValue", "x1", "x2", "ground_moments", "x1_summand", "x2_summand"]

_EPS = np.finfo(float).eps
_N_MIN = 32
_N_CAP = 1 << 26


@dataclass(frozen=True)
class SeriesValue:
    value: float
    n_used: int
    tail_bound: float

    def __float__(self):
        return self.value


def x1_summand(c: float, k):
    """(n+1)^2/l_n - (n+1) + c/(2(n+1)) at k = n+1, written without cancellation."""
    k = np.asarray(k, dtype=float)
    l = np.sqrt(k * k + c)
    return c * c * (2.0 * k + l) / (2.0 * k * l * (k + l) ** 2)


def x2_summand(c: float, k):
    """(n+1)^2 l_n - (n+1)^3 - c(n+1)/2 + c^2/(8(n+1)) at k = n+1, cancellation-free."""
    k = np.asarray(k, dtype=float)
    l = np.sqrt(k * k + c)
    return c**3 * (l + 3.0 * k) / (8.0 * k * (l + k) ** 3)


# Summand = sum_{j >= j0} binom(e, j) c^j k^(p - 2j), from k^p (1 + c/k^2)^e.
_SERIES = {
    "x1": dict(e=-0.5, p=1, j0=2, summand=x1_summand),
    "x2": dict(e=0.5, p=3, j0=3, summand=x2_summand),
}


def _tail(kind: str, c: float, n: int, orders: int) -> tuple[float, float]:
    """Expansion-based sum over k > n and a bound on what the expansion drops."""
    spec = _SERIES[kind]
    e, p, j0 = spec["e"], spec["p"], spec["j0"]
    q = n + 1.0
    ratio = abs(c) / (q * q)
    correction = 0.0
    for j in range(j0, j0 + orders):
        correction += binom(e, j) * c**j * zeta(2 * j - p, q)
    j_next = j0 + orders
    # |binom(+-1/2, j)| decreases in j, so the geometric bound holds for |c|/k^2 < 1.
    bound = abs(binom(e, j_next)) * abs(c) ** j_next * zeta(2 * j_next - p, q) / (1.0 - ratio)
    return float(correction), float(bound)


def _certified_sum(kind: str, c: float, tol: float, orders: int) -> SeriesValue:
    if not c > -1.0:
        raise DomainError(f"series requires c > -1, got {c}")
    if orders < 1:
        raise DomainError("orders must be at least 1")
    if c == 0.0:
        return SeriesValue(0.0, 0, 0.0)
    n = max(_N_MIN, int(math.ceil(math.sqrt(2.0 * abs(c)))))
    while True:
        correction, bound = _tail(kind, c, n, orders)
        if bound <= tol or n >= _N_CAP:
            break
        n *= 2
    terms = _SERIES[kind]["summand"](c, np.arange(1, n + 1, dtype=float))
    head = math.fsum(terms)
    total = head + correction
    rounding = 8.0 * _EPS * (math.fsum(np.abs(terms)) + abs(correction)) + _EPS * abs(total)
    return SeriesValue(total, n, bound + rounding)


def x1(c: float, tol: float = 1e-12, orders: int = 1) -> SeriesValue:
    """X1 = -(1+6c)/12 + sum_n [(n+1)^2/l_n - (n+1) + c/(2(n+1))].

    ``orders`` sets how many terms of the large-n expansion are summed
    analytically beyond the truncation index.
    """
    s = _certified_sum("x1", c, tol, orders)
    const = -(1.0 + 6.0 * c) / 12.0
    return SeriesValue(const + s.value, s.n_used, s.tail_bound)


def x2(c: float, tol: float = 1e-12, orders: int = 1) -> SeriesValue:
    """X2 = (1+10c-15c^2)/120 + sum_n [(n+1)^2 l_n - (n+1)^3 - c(n+1)/2 + c^2/(8(n+1))]."""
    s = _certified_sum("x2", c, tol, orders)
    const = (1.0 + 10.0 * c - 15.0 * c * c) / 120.0
    return SeriesValue(const + s.value, s.n_used, s.tail_bound)


def ground_moments(params: ModelParams, tol: float = 1e-12) -> tuple[float, float]:
    """Coincidence limits of (ground - parametrix) and of its d_t d_t' derivative.

    Returns ``(m0, m2)`` with
    m0 = -c log(a^2/2)/(16 pi^2 a^2) + X1/(4 pi^2 a^2) and
    m2 = -c^2 (3 + log(a^2/2))/(64 pi^2 a^4) + X2/(4 pi^2 a^4).
    """
    a, c = params.a, params.c
    log_term = math.log(0.5 * a * a)
    pi2 = math.pi**2
    m0 = -c * log_term / (16.0 * pi2 * a**2) + x1(c, tol).value / (4.0 * pi2 * a**2)
    m2 = -c * c * (3.0 + log_term) / (64.0 * pi2 * a**4) + x2(c, tol).value / (4.0 * pi2 * a**4)
    return m0, m2
