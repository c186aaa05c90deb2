"""Symmetric quasi-free states and their observables.

A symmetric state is fixed by non-negative mode coefficients a_n added on
top of the ground state.  Four families are represented:

* ``ground``: every a_n = 0;
* ``kms``: thermal coefficients at inverse temperature beta;
* ``modes``: a finite explicit map n -> a_n;
* ``bose``: the Lagrange-multiplier family with exponent
  lambda m^2 / (2 pi^2 a^2 l_n) + beta l_n / a (reduces to ``kms`` at lambda = 0).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DomainError
from .harmonics import gegenbauer_table
from .renormalization import renormalized_energy_pressure
from .series import ground_moments
from .spectral import ModelParams

__all__ = [
    "SymmetricState",
    "bose_coefficients",
    "bose_exponent",
    "bose_excess",
    "bose_table",
    "lambda_floor",
    "kms_coefficient",
    "mode_table",
    "moments",
    "regularized_coincidence",
    "two_point",
    "energy_pressure_reg",
    "energy_pressure_ren",
]

_PI2 = math.pi**2
_BLOCK = 512
_N_HARD_CAP = 50_000_000


@dataclass(frozen=True)
class SymmetricState:
    kind: str = "ground"
    beta: float | None = None
    lam: float = 0.0
    coeffs: tuple[tuple[int, float], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in ("ground", "kms", "modes", "bose"):
            raise DomainError(f"unknown state kind {self.kind!r}")
        if self.kind in ("kms", "bose"):
            if self.beta is None or not (self.beta > 0 and math.isfinite(self.beta)):
                raise DomainError(f"inverse temperature must be positive, got {self.beta}")
        if self.kind == "modes":
            clean = {}
            for n, a_n in self.coeffs:
                n, a_n = int(n), float(a_n)
                if n < 0:
                    raise DomainError("mode index must be non-negative")
                if not math.isfinite(a_n) or a_n < 0:
                    raise DomainError(f"mode coefficients must be finite and >= 0, got a_{n} = {a_n}")
                if a_n > 0:
                    clean[n] = clean.get(n, 0.0) + a_n
            object.__setattr__(self, "coeffs", tuple(sorted(clean.items())))

    @classmethod
    def ground(cls) -> "SymmetricState":
        return cls("ground")

    @classmethod
    def kms(cls, beta: float) -> "SymmetricState":
        return cls("kms", beta=float(beta))

    @classmethod
    def modes(cls, coeffs: dict) -> "SymmetricState":
        state = cls("modes", coeffs=tuple(coeffs.items()))
        return state if state.coeffs else cls.ground()

    @classmethod
    def bose(cls, lam: float, beta: float) -> "SymmetricState":
        return cls("bose", beta=float(beta), lam=float(lam))

    @property
    def is_ground(self) -> bool:
        return self.kind == "ground"

    def to_dict(self) -> dict:
        if self.kind == "ground":
            return {"kind": "ground"}
        if self.kind == "kms":
            return {"kind": "kms", "beta": self.beta}
        if self.kind == "bose":
            return {"kind": "bose", "lambda": self.lam, "beta": self.beta}
        return {"kind": "modes", "coeffs": {str(n): a for n, a in self.coeffs}}

    @classmethod
    def from_dict(cls, data: dict) -> "SymmetricState":
        kind = data.get("kind")
        if kind == "ground":
            return cls.ground()
        if kind == "kms":
            return cls.kms(data["beta"])
        if kind == "bose":
            return cls.bose(data["lambda"], data["beta"])
        if kind == "modes":
            return cls.modes({int(n): float(a) for n, a in data["coeffs"].items()})
        raise DomainError(f"unknown state kind {kind!r}")


def lambda_floor(params: ModelParams, beta: float) -> float:
    """lambda_0(beta) = -2 pi^2 a l_0^2 beta / m^2, the lower edge of the Bose family (m > 0)."""
    if params.m == 0.0:
        raise DomainError("lambda_0 is only defined for m > 0")
    return -2.0 * _PI2 * params.a * params.l(0) ** 2 * beta / params.m**2


def bose_exponent(params: ModelParams, beta: float, n, excess: float | None = None):
    """Exponent lam m^2/(2 pi^2 a^2 l_n) + beta l_n/a with lam = lambda_0 + excess.

    Written as excess m^2/(2 pi^2 a^2 l_n) + beta n(n+2)/(a l_n), using
    l_n^2 - l_0^2 = n(n+2), so that lam close to lambda_0 loses no digits.
    ``excess=None`` (or m = 0) gives the thermal exponent beta l_n / a.
    """
    n = np.asarray(n, dtype=float)
    a = params.a
    l = params.l(n)
    if excess is None or params.m == 0.0:
        return beta * l / a
    return excess * params.m**2 / (2.0 * _PI2 * a * a * l) + beta * n * (n + 2.0) / (a * l)


def bose_excess(params: ModelParams, lam: float, beta: float) -> float | None:
    if params.m == 0.0 or lam == 0.0:
        return None
    return lam - lambda_floor(params, beta)


def _coefficients_from_exponent(params: ModelParams, n, x):
    if np.any(x <= 0):
        raise DomainError("Bose exponent must be positive for every mode (lambda too small)")
    n = np.asarray(n, dtype=float)
    with np.errstate(over="ignore"):
        # overflow gives a_n = 0, the correct limit
        return (n + 1.0) ** 2 / (2.0 * _PI2 * params.a**2 * params.l(n)) / np.expm1(x)


def bose_coefficients(params: ModelParams, lam: float, beta: float, n):
    """a_n = (n+1)^2/(2 pi^2 a^2 l_n) / (exp(lam m^2/(2 pi^2 a^2 l_n) + beta l_n/a) - 1)."""
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    x = bose_exponent(params, beta, n, bose_excess(params, lam, beta))
    return _coefficients_from_exponent(params, n, x)


def kms_coefficient(params: ModelParams, beta: float, n):
    """Thermal coefficient a_n^(beta) = (n+1)^2/(2 pi^2 a^3) (a/l_n) e^{-beta l_n/a}/(1 - e^{-beta l_n/a})."""
    out = bose_coefficients(params, 0.0, beta, n)
    return float(out) if np.ndim(out) == 0 else out


def bose_table(params: ModelParams, beta: float, excess: float | None, rel: float = 1e-18):
    """(n, a_n) of a Bose-type state, cut once further modes are negligible.

    The cut tests a_n (n+1)^2 (l_n^2 + 1), which dominates every sum taken
    over the state, and only fires past the minimum of the exponent.
    """
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    chunks_n, chunks_a = [], []
    total = 0.0
    start = 0
    a = params.a
    if excess is None or params.m == 0.0:
        l_star = 0.0
    else:
        # exponent A/l + beta l/a is smallest at l = sqrt(A a/beta)
        A = excess * params.m**2 / (2.0 * _PI2 * a * a) - beta * params.l(0) ** 2 / a
        l_star = math.sqrt(max(A, 0.0) * a / beta)
    while start < _N_HARD_CAP:
        n = np.arange(start, start + _BLOCK, dtype=float)
        a_n = _coefficients_from_exponent(params, n, bose_exponent(params, beta, n, excess))
        weight = a_n * (n + 1.0) ** 2 * (params.l(n) ** 2 + 1.0)
        chunks_n.append(n)
        chunks_a.append(a_n)
        total += float(weight.sum())
        decreasing = weight[-1] <= weight[-2] and params.l(n[-1]) >= l_star
        if decreasing and weight[-1] <= rel * total:
            below = np.nonzero(weight > rel * total)[0]
            stop = int(below[-1]) + 1 if below.size else 0
            chunks_n[-1], chunks_a[-1] = n[:stop + 1], a_n[:stop + 1]
            break
        start += _BLOCK
    return np.concatenate(chunks_n).astype(np.int64), np.concatenate(chunks_a)


def mode_table(state: SymmetricState, params: ModelParams, rel: float = 1e-18):
    """(n, a_n) arrays over the (numerically) non-zero modes of ``state``."""
    if state.kind == "ground":
        return np.zeros(0, dtype=np.int64), np.zeros(0)
    if state.kind == "modes":
        n = np.array([k for k, _ in state.coeffs], dtype=np.int64)
        return n, np.array([v for _, v in state.coeffs], dtype=float)
    lam = state.lam if state.kind == "bose" else 0.0
    return bose_table(params, state.beta, bose_excess(params, lam, state.beta), rel)


def moments(state: SymmetricState, params: ModelParams) -> tuple[float, float]:
    """(sum a_n, sum a_n l_n^2 / a^2): the coincidence values of omega_2 - omega_2^ground."""
    n, a_n = mode_table(state, params)
    if n.size == 0:
        return 0.0, 0.0
    l2 = params.l(n) ** 2
    return math.fsum(a_n), math.fsum(a_n * l2) / params.a**2


def regularized_coincidence(state: SymmetricState, params: ModelParams) -> tuple[float, float]:
    """(omega_2+ - H_+)|_D and d_t d_t' (omega_2+ - H_+)|_D for the state."""
    m0, m2 = ground_moments(params)
    sa, sal2 = moments(state, params)
    return m0 + sa, m2 + sal2


def two_point(
    state: SymmetricState,
    params: ModelParams,
    dt: float,
    chi: float,
    eps: float,
    n_max: int,
    tail_correction: bool = True,
) -> complex:
    """Regulated two-point function at time separation ``dt`` and angle ``chi``.

    The ground part is the mode sum up to ``n_max`` with damping
    exp(-eps l_n / a).  With ``tail_correction`` the modes beyond ``n_max``
    are added in their large-n form (n+1)/l_n e^{-iT l_n} ~ e^{-iT(n+1)},
    which the Gegenbauer recurrence sums in closed form; for c = 0 that
    form is exact.  The state part sum a_n/(n+1) cos(dt l_n/a) C_n(cos chi)
    is added without regulator.
    """
    if not 0.0 <= chi < math.pi:
        raise DomainError(f"chi must lie in [0, pi) (antipodal points excluded), got {chi}")
    if not eps > 0:
        raise DomainError("regulator eps must be positive")
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    a = params.a
    y = math.cos(chi)
    gegen = gegenbauer_table(n_max + 1, 1.0, y)
    n = np.arange(n_max + 1, dtype=float)
    l = params.l(n)
    T = complex(dt, -eps) / a
    terms = (n + 1.0) / l * np.exp(-1j * T * l) * gegen[: n_max + 1]
    ground = complex(math.fsum(terms.real), math.fsum(terms.imag))
    if tail_correction:
        z = np.exp(-1j * T)
        m = n_max + 1
        # sum_{n >= m} z^(n+1) C_n(y) = z^(m+1) (C_m - z C_{m-1}) / (1 - 2 y z + z^2)
        ground += z ** (m + 1) * (gegen[m] - z * gegen[m - 1]) / (1.0 - 2.0 * y * z + z * z)
    value = ground / (4.0 * _PI2 * a * a)

    ns, a_n = mode_table(state, params)
    if ns.size:
        g = gegenbauer_table(int(ns.max()), 1.0, y)[ns]
        corr = a_n / (ns + 1.0) * np.cos(dt * params.l(ns) / a) * g
        value += math.fsum(corr)
    return complex(value)


def energy_pressure_reg(state: SymmetricState, params: ModelParams) -> tuple[float, float]:
    """Regularised energy density and pressure of a symmetric state."""
    w0, w2 = regularized_coincidence(state, params)
    c2_term = params.c**2 / (64.0 * _PI2 * params.a**4)
    e_reg = w2 + 3.0 * c2_term
    p_reg = (params.m**2 * w0 - w2) / 3.0 + c2_term
    return e_reg, p_reg


def energy_pressure_ren(state: SymmetricState, params: ModelParams) -> tuple[float, float]:
    """Renormalised energy density and pressure of a symmetric state."""
    e_reg, p_reg = energy_pressure_reg(state, params)
    return renormalized_energy_pressure(e_reg, p_reg, params)
