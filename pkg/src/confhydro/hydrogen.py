"""Conformable hydrogen-atom bound states.

Builds the scaled radial problem, radial and full wavefunctions, energy
levels, and the radial probability density r^(2 alpha) |R|^2.  Natural
units (alpha-Bohr radius = 1) are the default; energies are reported in eV
through the combined constant 13.6^alpha.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .calculus import Alpha, AlphaLike, alpha_value
from .errors import DomainError
from .special import (
    LaguerreParams,
    laguerre_assoc,
    laguerre_assoc_du,
    laguerre_assoc_du2,
    LegendreParams,
    legendre_assoc,
)

HYDROGEN_ENERGY_SCALE_EV = 13.6


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    l: int
    m_l: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"principal quantum number must be >= 1, got {self.n}")
        if not (0 <= self.l <= self.n - 1):
            raise ValueError(f"orbital quantum number must satisfy 0 <= l <= n-1, got l={self.l}, n={self.n}")
        if abs(self.m_l) > self.l:
            raise ValueError(f"magnetic quantum number must satisfy |m_l| <= l, got m_l={self.m_l}, l={self.l}")


@dataclass(frozen=True)
class ModelParams:
    alpha: Alpha
    r_b_alpha: float = 1.0
    energy_scale: float = HYDROGEN_ENERGY_SCALE_EV
    mode: str = "natural"

    def __post_init__(self):
        if self.mode not in ("natural", "physical"):
            raise ValueError(f"mode must be 'natural' or 'physical', got {self.mode!r}")
        if self.r_b_alpha <= 0:
            raise ValueError("alpha-Bohr radius must be positive")
        if self.mode == "natural" and self.r_b_alpha != 1.0:
            raise ValueError("natural mode forces r_b_alpha = 1")
        if self.energy_scale <= 0:
            raise ValueError("energy scale must be positive")

    @classmethod
    def natural(cls, alpha: AlphaLike) -> "ModelParams":
        return cls(alpha=Alpha(alpha_value(alpha)))

    @classmethod
    def physical(cls, alpha: AlphaLike, r_b_alpha: float) -> "ModelParams":
        return cls(alpha=Alpha(alpha_value(alpha)), r_b_alpha=r_b_alpha, mode="physical")


@dataclass(frozen=True)
class ScaledRadialProblem:
    k: float
    lambda_alpha: float
    n: int
    l: int

    def rho_alpha_of_r(self, r, alpha: AlphaLike):
        """Coordinate map rho^alpha = 2 k r^alpha (r accepted in plain form)."""
        a = alpha_value(alpha)
        return 2.0 * self.k * np.asarray(r, dtype=float) ** a


@dataclass(frozen=True)
class DensityCurve:
    qn: QuantumNumbers
    alpha: float
    r: np.ndarray
    values: np.ndarray


def energy_level(n: int, alpha: AlphaLike, energy_scale: float = HYDROGEN_ENERGY_SCALE_EV) -> float:
    """Bound-state energy -(13.6 eV)^alpha / (2^(1-alpha) alpha^2 n^2)."""
    if n < 1:
        raise ValueError(f"principal quantum number must be >= 1, got {n}")
    a = alpha_value(alpha)
    return -(energy_scale**a) / (2.0 ** (1.0 - a) * a * a * n * n)


def scaled_problem(qn: QuantumNumbers, params: ModelParams) -> ScaledRadialProblem:
    """Scaled radial problem: k = 1/(alpha r_b n), lambda = n alpha."""
    a = params.alpha.value
    k = 1.0 / (a * params.r_b_alpha * qn.n)
    return ScaledRadialProblem(k=k, lambda_alpha=qn.n * a, n=qn.n, l=qn.l)


def _radial_norm(qn: QuantumNumbers, params: ModelParams) -> float:
    a = params.alpha.value
    n, l = qn.n, qn.l
    rb = params.r_b_alpha
    return math.sqrt(
        (2.0 / (a * n * rb)) ** 3
        * math.factorial(n - l - 1)
        / (2.0 * n * a ** (2 * l + 2) * math.factorial(n + l))
    )


def radial_wavefunction(qn: QuantumNumbers, params: ModelParams, r):
    """Radial amplitude R_alpha(r^alpha) for the given bound state."""
    a = params.alpha.value
    n, l = qn.n, qn.l
    rarr = np.asarray(r, dtype=float)
    if np.any(rarr <= 0):
        raise DomainError("radial coordinate must be positive")
    w = 2.0 * rarr**a / (a * a * params.r_b_alpha * n)
    lag = laguerre_assoc(LaguerreParams(n - l - 1, 2 * l + 1), w)
    out = _radial_norm(qn, params) * (a * w) ** l * np.exp(-w / 2.0) * lag
    return out if np.ndim(out) else float(out)


def radial_with_derivatives(qn: QuantumNumbers, params: ModelParams, r):
    """R and its first two classical r-derivatives, all analytic.

    Used by the residual certifiers; derivatives are taken through the
    substituted argument w = 2 r^alpha / (alpha^2 r_b n) with the Laguerre
    lowering relations, then chained back to r.
    """
    a = params.alpha.value
    n, l = qn.n, qn.l
    rarr = np.asarray(r, dtype=float)
    if np.any(rarr <= 0):
        raise DomainError("radial coordinate must be positive")
    c = 2.0 / (a * a * params.r_b_alpha * n)
    w = c * rarr**a
    lp = LaguerreParams(n - l - 1, 2 * l + 1)
    L = np.asarray(laguerre_assoc(lp, w), dtype=float)
    dL = np.asarray(laguerre_assoc_du(lp, w), dtype=float)
    d2L = np.asarray(laguerre_assoc_du2(lp, w), dtype=float)
    E = np.exp(-w / 2.0)
    wl = w**l
    wlm1 = l * w ** (l - 1) if l >= 1 else np.zeros_like(w)
    wlm2 = l * (l - 1) * w ** (l - 2) if l >= 2 else np.zeros_like(w)
    B = wl * E * L
    Q = wlm1 * L + wl * (dL - 0.5 * L)
    dB = Q * E
    dQ = wlm2 * L + wlm1 * dL + wlm1 * (dL - 0.5 * L) + wl * (d2L - 0.5 * dL)
    d2B = (dQ - 0.5 * Q) * E
    C = _radial_norm(qn, params) * a**l
    dw = c * a * rarr ** (a - 1.0)
    d2w = c * a * (a - 1.0) * rarr ** (a - 2.0)
    R = C * B
    dR = C * dB * dw
    d2R = C * (d2B * dw * dw + dB * d2w)
    if np.ndim(r):
        return R, dR, d2R
    return float(R), float(dR), float(d2R)


def u_function(qn: QuantumNumbers, params: ModelParams, rho):
    """Scaled radial solution u_alpha(rho^alpha); satisfies R = 2k u / rho^alpha."""
    u, _, _ = u_with_derivatives(qn, params, rho)
    return u


def u_with_derivatives(qn: QuantumNumbers, params: ModelParams, rho):
    """u and its first two classical rho-derivatives, all analytic."""
    a = params.alpha.value
    n, l = qn.n, qn.l
    rarr = np.asarray(rho, dtype=float)
    if np.any(rarr <= 0):
        raise DomainError("scaled radial coordinate must be positive")
    prob = scaled_problem(qn, params)
    A = math.sqrt(
        prob.k
        * math.factorial(n - l - 1)
        / (n * a ** (2 * l + 2) * math.factorial(n + l))
    )
    t = rarr**a
    lp = LaguerreParams(n - l - 1, 2 * l + 1)
    L = np.asarray(laguerre_assoc(lp, t / a), dtype=float)
    dL = np.asarray(laguerre_assoc_du(lp, t / a), dtype=float)
    d2L = np.asarray(laguerre_assoc_du2(lp, t / a), dtype=float)
    E = np.exp(-t / (2.0 * a))
    tl = t**l
    G = t * tl * E * L
    S = (l + 1) * tl * L + t * tl * (dL / a - L / (2.0 * a))
    dG = S * E
    dS = (
        (l * (l + 1) * t ** (l - 1) if l >= 1 else np.zeros_like(t)) * L
        + (l + 1) * tl * dL / a
        + (l + 1) * tl * (dL / a - L / (2.0 * a))
        + t * tl * (d2L / (a * a) - dL / (2.0 * a * a))
    )
    d2G = (dS - S / (2.0 * a)) * E
    dt = a * rarr ** (a - 1.0)
    d2t = a * (a - 1.0) * rarr ** (a - 2.0)
    u = A * G
    du = A * dG * dt
    d2u = A * (d2G * dt * dt + dG * d2t)
    if np.ndim(rho):
        return u, du, d2u
    return float(u), float(du), float(d2u)


def angular_Y(qn: QuantumNumbers, alpha: AlphaLike, theta, phi):
    """Conformable spherical harmonic; equals the standard Y_l^m at alpha = 1.

    The alpha-dependent prefactor (including the alpha^(2m-2) factor) is
    carried entirely by the normalization constant.
    """
    a = alpha_value(alpha)
    l, m = qn.l, qn.m_l
    th = np.asarray(theta, dtype=float)
    ph = np.asarray(phi, dtype=float)
    if np.any(th <= 0):
        raise DomainError("theta must be positive")
    if np.any(ph < 0):
        raise DomainError("phi must be nonnegative")
    x = th**a
    y = ph**a
    if np.any(x > math.pi + 1e-12):
        raise DomainError("theta^alpha must lie in [0, pi]")
    if np.any(y > 2.0 * math.pi + 1e-12):
        raise DomainError("phi^alpha must lie in [0, 2 pi]")
    norm = math.sqrt(
        (2 * l + 1)
        * math.factorial(l - m)
        / (a ** (2 * m - 2) * 2.0 * math.factorial(l + m) * (2.0 * math.pi) ** a)
    )
    p = legendre_assoc(LegendreParams(l, m), np.cos(x))
    out = norm * np.exp(1j * m * y) * p
    return out if np.ndim(out) else complex(out)


def full_wavefunction(qn: QuantumNumbers, params: ModelParams, r, theta, phi):
    """psi = R_{n l alpha}(r^alpha) * Y_{l alpha}^{m alpha}(theta, phi)."""
    return radial_wavefunction(qn, params, r) * angular_Y(
        qn, params.alpha, theta, phi
    )


def probability_density_radial(
    qn: QuantumNumbers, params: ModelParams, grid
) -> DensityCurve:
    """alpha-probability density r^(2 alpha) |R|^2 on a sorted positive grid."""
    g = np.asarray(grid, dtype=float)
    if g.ndim != 1 or g.size == 0:
        raise ValueError("grid must be a nonempty 1-d array")
    if np.any(g <= 0):
        raise ValueError("grid points must be positive")
    if np.any(np.diff(g) <= 0):
        raise ValueError("grid must be strictly increasing")
    a = params.alpha.value
    R = radial_wavefunction(qn, params, g)
    vals = g ** (2.0 * a) * R * R
    return DensityCurve(qn=qn, alpha=a, r=g, values=vals)
