"""Effective couplings, the renormalised perfect-fluid shift, and the Hadamard parametrix."""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import i1, j1

from .exceptions import DomainError, SingularRenormalizationError, SingularSupportError
from .spectral import ModelParams

__all__ = [
    "EffectiveConstants",
    "effective_constants",
    "renormalized_energy_pressure",
    "hadamard_parametrix",
    "hadamard_parametrix_series",
    "hadamard_source_series",
    "synge_sigma",
]

_PI2 = math.pi**2


@dataclass(frozen=True)
class EffectiveConstants:
    kappa_eff: float
    lambda_eff: float
    c_prime: float
    c1: float
    c2: float


def effective_constants(params: ModelParams) -> EffectiveConstants:
    """kappa', Lambda', c' and the fluid shifts c1, c2 (with R = 6/a^2)."""
    al1, al2, al3, al4, al5 = params.renorm.alpha
    be1, be2, be3 = params.renorm.beta
    kappa, lam, m2, R = params.kappa, params.Lambda, params.m**2, params.R
    denom = 1.0 - kappa * (al2 * m2 + be2 * lam)
    if denom == 0.0 or abs(denom) <= 1e-15 * (1.0 + abs(kappa * (al2 * m2 + be2 * lam))):
        raise SingularRenormalizationError(
            "1 - kappa*(alpha2 m^2 + beta2 Lambda) vanishes; effective couplings undefined"
        )
    local = al1 * m2 * m2 + be1 * lam * lam + be3 * lam * m2
    grav = al2 * m2 + be2 * lam
    quad = 3.0 * al3 + al4 + al5
    kappa_eff = kappa / denom
    if not math.isfinite(kappa_eff):
        raise SingularRenormalizationError("effective kappa is not finite")
    return EffectiveConstants(
        kappa_eff=kappa_eff,
        lambda_eff=(lam - kappa * local) / denom,
        c_prime=quad / 6.0,
        c1=local - 0.5 * R * grav - R * R * quad / 6.0,
        c2=grav + 2.0 * R * quad / 3.0,
    )


def renormalized_energy_pressure(e_reg: float, p_reg: float, params: ModelParams) -> tuple[float, float]:
    """Shift regularised (E, P) to renormalised values.

    E_ren = E_reg - c^2/(32 pi^2 a^4) - c1,  P_ren = P_reg - c^2/(32 pi^2 a^4) - c1 - c2 R/3.
    """
    eff = effective_constants(params)
    shift = params.c**2 / (32.0 * _PI2 * params.a**4) + eff.c1
    return e_reg - shift, p_reg - shift - eff.c2 * params.R / 3.0


def synge_sigma(params: ModelParams, dt: float, chi: float) -> float:
    """Half the squared geodesic distance, -dt^2/2 + a^2 chi^2/2."""
    return -0.5 * dt * dt + 0.5 * params.a**2 * chi * chi


def _check_separation(params, dt, chi):
    if not 0.0 <= chi < math.pi:
        raise DomainError(f"geodesic angle must lie in [0, pi), got {chi}")
    if dt == 0.0 and chi == 0.0:
        raise SingularSupportError("coincident points")
    sigma = synge_sigma(params, dt, chi)
    scale = 0.5 * (dt * dt + params.a**2 * chi * chi)
    if abs(sigma) <= 4.0 * 2.0**-52 * scale:
        raise SingularSupportError("null separated points")
    u0 = 1.0 if chi == 0.0 else chi / math.sin(chi)
    # sigma_eps = sigma + i eps dt + O(eps^2), so timelike pairs pick arg = +pi sign(dt)
    if sigma > 0:
        log_sigma = complex(math.log(sigma), 0.0)
    else:
        log_sigma = complex(math.log(-sigma), math.pi * math.copysign(1.0, dt))
    return sigma, u0, log_sigma


def _z_i1(w: float, a: float) -> float:
    """sqrt(w) I1(sqrt(w)/a), continued to w < 0 as -sqrt(-w) J1(sqrt(-w)/a)."""
    if w >= 0:
        s = math.sqrt(w)
        return s * float(i1(s / a))
    s = math.sqrt(-w)
    return -s * float(j1(s / a))


def _z_j1(w: float, a: float) -> float:
    """sqrt(w) J1(sqrt(w)/a), continued to w < 0 as -sqrt(-w) I1(sqrt(-w)/a)."""
    if w >= 0:
        s = math.sqrt(w)
        return s * float(j1(s / a))
    s = math.sqrt(-w)
    return -s * float(i1(s / a))


def hadamard_parametrix(params: ModelParams, dt: float, chi: float) -> complex:
    """Closed-form Hadamard parametrix H at real separation (dt, chi).

    Spacelike pairs give a real value; timelike pairs carry the imaginary
    part of the boundary value of log(sigma).
    """
    sigma, u0, log_sigma = _check_separation(params, dt, chi)
    a, c = params.a, params.c
    leading = u0 / (8.0 * _PI2 * sigma)
    if c == 0.0:
        return complex(leading)
    if c > 0.0:
        g = _z_i1(2.0 * c * sigma, a)
        return leading + u0 / (16.0 * _PI2 * a * sigma) * g * log_sigma
    g = _z_j1(-2.0 * c * sigma, a)
    return leading - u0 / (16.0 * _PI2 * a * sigma) * g * log_sigma


def _bessel_like_series(x: float, coeff, k_max: int = 200) -> float:
    total, term_pow, k = 0.0, 1.0, 0
    while k <= k_max:
        term = coeff(k) * term_pow
        total += term
        if k > 2 and abs(term) <= 1e-18 * abs(total):
            break
        term_pow *= x
        k += 1
    return total


def hadamard_parametrix_series(params: ModelParams, dt: float, chi: float) -> complex:
    """The same parametrix from its power series in c sigma / (2 a^2)."""
    sigma, u0, log_sigma = _check_separation(params, dt, chi)
    a, c = params.a, params.c
    x = c * sigma / (2.0 * a * a)
    s = _bessel_like_series(x, lambda k: 1.0 / (math.factorial(k) * math.factorial(k + 1)))
    return u0 / (8.0 * _PI2 * sigma) + u0 * c / (16.0 * _PI2 * a * a) * log_sigma * s


def hadamard_source_series(params: ModelParams, dt: float, chi: float) -> float:
    """(-Box + m^2 + xi R) H, which tends to -3 c^2/(32 pi^2 a^4) at coincidence."""
    a, c = params.a, params.c
    sigma = synge_sigma(params, dt, chi)
    u0 = 1.0 if chi == 0.0 else chi / math.sin(chi)
    x = c * sigma / (2.0 * a * a)
    s = _bessel_like_series(
        x, lambda k: (2 * k + 3) / (math.factorial(k + 1) * math.factorial(k + 2))
    )
    return -u0 * c * c / (16.0 * _PI2 * a**4) * s
