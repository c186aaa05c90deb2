"""Physical parameters and the spectral data of the Einstein static universe.

All quantities are pure numbers in units where the Hadamard length scale
equals one, so ``log(a**2 / 2)`` is evaluated with ``a`` as given.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .exceptions import InvalidParametersError

__all__ = [
    "RenormConstants",
    "ModelParams",
    "CurvatureData",
    "coupling_c",
    "mode_frequency",
    "ricci_scalar",
    "curvature",
    "load_params",
]


@dataclass(frozen=True)
class RenormConstants:
    """Coefficients alpha_1..alpha_5 and beta_1..beta_3 of the local curvature terms."""

    alpha: tuple[float, float, float, float, float] = (0.0, 0.0, 0.0, 0.0, 0.0)
    beta: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        alpha = tuple(float(x) for x in self.alpha)
        beta = tuple(float(x) for x in self.beta)
        if len(alpha) != 5 or len(beta) != 3:
            raise InvalidParametersError("need exactly 5 alpha and 3 beta constants")
        if not all(math.isfinite(x) for x in alpha + beta):
            raise InvalidParametersError("renormalisation constants must be finite")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def c_prime(self) -> float:
        a = self.alpha
        return (3.0 * a[2] + a[3] + a[4]) / 6.0


@dataclass(frozen=True)
class ModelParams:
    """Radius ``a``, cosmological constant ``Lambda``, mass ``m``, coupling ``xi``
    and gravitational coupling ``kappa`` (= 8 pi G), plus renormalisation constants.

    Construction fails unless ``a > 0``, ``m >= 0``, ``kappa != 0`` and
    ``c = m^2 a^2 + 6 xi - 1 > -1``.
    """

    a: float = 1.0
    Lambda: float = 0.0
    m: float = 0.0
    xi: float = 1.0 / 6.0
    kappa: float = 1.0
    renorm: RenormConstants = field(default_factory=RenormConstants)

    def __post_init__(self):
        for name in ("a", "Lambda", "m", "xi", "kappa"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidParametersError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.a <= 0:
            raise InvalidParametersError(f"radius a must be positive, got {self.a}")
        if self.m < 0:
            raise InvalidParametersError(f"mass m must be non-negative, got {self.m}")
        if self.kappa == 0:
            raise InvalidParametersError("kappa must be non-zero")
        if not self.c > -1.0:
            raise InvalidParametersError(
                f"c = m^2 a^2 + 6 xi - 1 = {self.c} must exceed -1 (no ground state otherwise)"
            )

    @property
    def c(self) -> float:
        return self.m**2 * self.a**2 + 6.0 * self.xi - 1.0

    @property
    def R(self) -> float:
        return 6.0 / self.a**2

    def l(self, n):
        """Mode frequency l_n = sqrt((n+1)^2 + c); accepts scalars or arrays."""
        k = np.asarray(n, dtype=float) + 1.0
        out = np.sqrt(k * k + self.c)
        return float(out) if out.ndim == 0 else out

    def replace(self, **changes) -> "ModelParams":
        """Return a copy with fields changed; ``alpha``/``beta`` update the renorm constants."""
        alpha = changes.pop("alpha", self.renorm.alpha)
        beta = changes.pop("beta", self.renorm.beta)
        renorm = changes.pop("renorm", RenormConstants(alpha, beta))
        kw = dict(a=self.a, Lambda=self.Lambda, m=self.m, xi=self.xi, kappa=self.kappa)
        kw.update(changes)
        return ModelParams(renorm=renorm, **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "ModelParams":
        """Build from ``{"a","Lambda","m","xi","kappa","alpha":[5],"beta":[3]}``.

        Missing renormalisation arrays default to zeros.
        """
        known = {"a", "Lambda", "m", "xi", "kappa", "alpha", "beta"}
        unknown = set(data) - known
        if unknown:
            raise InvalidParametersError(f"unknown parameter keys: {sorted(unknown)}")
        missing = {"a", "Lambda", "m", "xi", "kappa"} - set(data)
        if missing:
            raise InvalidParametersError(f"missing parameter keys: {sorted(missing)}")
        try:
            renorm = RenormConstants(
                tuple(data.get("alpha", (0.0,) * 5)), tuple(data.get("beta", (0.0,) * 3))
            )
            return cls(
                a=data["a"], Lambda=data["Lambda"], m=data["m"], xi=data["xi"],
                kappa=data["kappa"], renorm=renorm,
            )
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InvalidParametersError):
                raise
            raise InvalidParametersError(str(exc)) from exc

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "Lambda": self.Lambda,
            "m": self.m,
            "xi": self.xi,
            "kappa": self.kappa,
            "alpha": list(self.renorm.alpha),
            "beta": list(self.renorm.beta),
        }


@dataclass(frozen=True)
class CurvatureData:
    R: float
    G00: float


def load_params(path) -> ModelParams:
    """Read a parameter JSON document from ``path``."""
    with open(Path(path)) as fh:
        return ModelParams.from_dict(json.load(fh))


def coupling_c(params: ModelParams) -> float:
    """c = m^2 a^2 + 6 xi - 1, strictly greater than -1 for valid params."""
    return params.c


def mode_frequency(params: ModelParams, n):
    """l_n = sqrt(n(n+2) + m^2 a^2 + 6 xi) for integer n >= 0 (scalar or array)."""
    n_arr = np.asarray(n)
    if np.any(n_arr < 0):
        raise InvalidParametersError("mode index must be non-negative")
    return params.l(n)


def ricci_scalar(params: ModelParams) -> float:
    return params.R


def curvature(params: ModelParams) -> CurvatureData:
    R = params.R
    return CurvatureData(R=R, G00=R / 2.0)
