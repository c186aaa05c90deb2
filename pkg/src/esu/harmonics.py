"""Gegenbauer polynomials and projection kernels for spherical harmonics on S^p."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError

__all__ = [
    "SphereDegree",
    "gegenbauer",
    "gegenbauer_table",
    "eigenspace_dim",
    "projection_kernel",
    "laplacian_eigenvalue",
    "sphere_volume",
]


@dataclass(frozen=True)
class SphereDegree:
    n: int
    p: int = 3

    def __post_init__(self):
        if self.n < 0 or self.p < 2:
            raise DomainError(f"need n >= 0 and p >= 2, got n={self.n}, p={self.p}")

    @property
    def alpha(self) -> float:
        return 0.5 * (self.p - 1)

    @property
    def dim(self) -> int:
        return eigenspace_dim(self.n, self.p)

    @property
    def eigenvalue(self) -> int:
        return laplacian_eigenvalue(self.n, self.p)


def _check_y(y):
    y = np.asarray(y, dtype=float)
    if np.any(np.abs(y) > 1.0):
        raise DomainError("Gegenbauer argument must satisfy |y| <= 1")
    return y


def gegenbauer_table(n_max: int, alpha: float, y):
    """Values C_0^(alpha)(y) .. C_{n_max}^(alpha)(y) by forward recurrence.

    Returns an array of shape ``(n_max + 1,) + shape(y)``.
    """
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    if alpha <= 0:
        raise DomainError("only alpha > 0 is supported")
    y = _check_y(y)
    out = np.empty((n_max + 1,) + y.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 2.0 * alpha * y
    for n in range(1, n_max):
        # (n+1) C_{n+1} = 2 (n + alpha) y C_n - (n + 2 alpha - 1) C_{n-1}
        out[n + 1] = (2.0 * (n + alpha) * y * out[n] - (n + 2.0 * alpha - 1.0) * out[n - 1]) / (n + 1.0)
    return out


def gegenbauer(n: int, alpha: float = 1.0, y=1.0):
    """C_n^(alpha)(y) for |y| <= 1. For alpha = 1 this is C_{n+2} = 2y C_{n+1} - C_n."""
    if n < 0:
        raise DomainError("degree must be non-negative")
    val = gegenbauer_table(n, alpha, y)[n]
    return float(val) if val.ndim == 0 else val


def eigenspace_dim(n: int, p: int) -> int:
    """Dimension of the degree-n spherical harmonics on S^p; (n+1)^2 for p = 3."""
    if n < 0 or p < 1:
        raise DomainError("need n >= 0 and p >= 1")
    if n == 0:
        return 1
    return math.comb(n + p - 1, n) + math.comb(n + p - 2, n - 1)


def laplacian_eigenvalue(n: int, p: int) -> int:
    """Eigenvalue n(n+p-1) of -Laplacian on the degree-n harmonics of S^p."""
    if n < 0 or p < 1:
        raise DomainError("need n >= 0 and p >= 1")
    return n * (n + p - 1)


def sphere_volume(p: int) -> float:
    """Area of the unit sphere S^p."""
    return 2.0 * math.pi ** (0.5 * (p + 1)) / math.gamma(0.5 * (p + 1))


def projection_kernel(n: int, p: int, chi):
    """Integral kernel E_n^(p)(chi) of the projection onto degree-n harmonics.

    ``chi`` is the geodesic angle in [0, pi].
    """
    if p < 2:
        raise DomainError("projection_kernel requires p >= 2")
    chi = np.asarray(chi, dtype=float)
    if np.any(chi < 0.0) or np.any(chi > math.pi):
        raise DomainError("geodesic angle must lie in [0, pi]")
    alpha = 0.5 * (p - 1)
    pref = (2 * n + p - 1) * math.gamma(0.5 * (p + 1)) / (2.0 * (p - 1) * math.pi ** (0.5 * (p + 1)))
    y = np.clip(np.cos(chi), -1.0, 1.0)
    val = pref * gegenbauer_table(n, alpha, y)[n]
    return float(val) if val.ndim == 0 else val
