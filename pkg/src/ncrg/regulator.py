"""Quadratic IR regulator on the quarter disk and its ``h_k`` constants.

``r_N(a, b) = Z (N²/(a²+b²) − 1)`` inside ``a² + b² ≤ N²``.  With
``P = Z + r_N`` and ``∂_t r_N = Z [2N²/ρ² − η (N²/ρ² − 1)]`` (``∂_t N = N``,
``∂_t Z = −ηZ``) the constants are ``h_k = lim Z^k h̃_k / N²``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .frge import ETA_SYMBOL
from .scalar import Scalar

PI_SYMBOL = "pi"
ORDERS = (1, 2, 3)


@dataclass(frozen=True)
class RegulatorSpec:
    N: int
    Z: float = 1.0
    eta: float = 0.0

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("N must be at least 2")
        if self.Z <= 0:
            raise ValueError("Z must be positive")

    def _rho2(self) -> np.ndarray:
        a = np.arange(1, self.N + 1, dtype=float)
        return a[:, None] ** 2 + a[None, :] ** 2

    def profile(self) -> np.ndarray:
        """``r_N(a, b)`` on ``{1..N}²``."""
        rho2 = self._rho2()
        return np.where(rho2 <= self.N ** 2, self.Z * (self.N ** 2 / rho2 - 1.0), 0.0)

    def dt_profile(self) -> np.ndarray:
        rho2 = self._rho2()
        n2 = float(self.N) ** 2
        inside = rho2 <= n2
        return np.where(inside, self.Z * (2 * n2 / rho2 - self.eta * (n2 / rho2 - 1.0)), 0.0)


def _check_k(k: int):
    if k not in ORDERS:
        raise ValueError(f"k must be one of {ORDERS}, got {k}")


def h_tilde_numeric(k: int, N: int, eta: float = 0.0, Z: float = 1.0) -> float:
    """Lattice value of ``Z^k h̃_k(N) / N²``."""
    _check_k(k)
    spec = RegulatorSpec(N, Z, eta)
    rho2 = spec._rho2()
    inside = rho2 <= float(N) ** 2
    p = Z + spec.profile()
    terms = spec.dt_profile()[inside] / p[inside] ** (k + 1)
    return float(Z ** k * terms.sum() / N ** 2)


def h_closed_form(k: int) -> Scalar:
    """``h_k`` as an exact expression in ``pi`` and ``eta``."""
    _check_k(k)
    pi, eta = Scalar.symbol(PI_SYMBOL), Scalar.symbol(ETA_SYMBOL)
    c = {1: (6, 5, 24), 2: (8, 7, 48), 3: (10, 9, 80)}[k]
    return pi * (Scalar.const(c[0]) - eta * c[1]) * Fraction(1, c[2])


def h_value(k: int, eta: float) -> float:
    return float(h_closed_form(k).evaluate({PI_SYMBOL: math.pi, ETA_SYMBOL: eta}))


def h_eta_coefficients(k: int) -> tuple:
    """``(c0, c1)`` with ``h_k = c0 + c1 η``."""
    _check_k(k)
    c = {1: (6, 5, 24), 2: (8, 7, 48), 3: (10, 9, 80)}[k]
    return math.pi * c[0] / c[2], -math.pi * c[1] / c[2]


def h_lattice_continuum(k: int, eta: float) -> float:
    """Continuum limit of the lattice sum: ``(π/2)[(2−η)/(2(k+1)) + η/(2(k+2))]``."""
    _check_k(k)
    return math.pi / 2 * ((2 - eta) / (2 * (k + 1)) + eta / (2 * (k + 2)))


def h_polar_integral(k: int) -> float:
    """Quarter-disk integral at ``η = 0``: ``(π/2) ∫₀¹ 2 r^{2k+1} dr``."""
    _check_k(k)
    return math.pi / (2 * (k + 1))


@dataclass
class HkReport:
    k: int
    N: int
    eta: float
    numeric: float
    closed_form: float
    continuum: float
    relative_error: float
    eta_slope_closed_form: float
    eta_slope_continuum: float
    eta_slope_discrepancy: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def hk_report(k: int, N: int, eta: float = 0.0) -> HkReport:
    num = h_tilde_numeric(k, N, eta)
    closed = h_value(k, eta)
    cont = h_lattice_continuum(k, eta)
    slope_closed = h_eta_coefficients(k)[1]
    slope_cont = h_lattice_continuum(k, 1.0) - h_lattice_continuum(k, 0.0)
    return HkReport(k, N, eta, num, closed, cont, abs(num - closed) / abs(closed),
                    slope_closed, slope_cont, not math.isclose(slope_closed, slope_cont, rel_tol=1e-12))
