"""Numerical certification of the derivation chain.

Each certifier evaluates the displayed differential equation (or integral
identity) with the conformable operators and reports the worst residual on
a grid.  Relative residuals are normalized by the largest individual term
magnitude at each point, since the terms cancel to near zero where the
solution is exact.
"""
from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass
from typing import Callable, Optional

import numpy as np

from .calculus import (
    AlphaLike,
    Differentiable,
    _first_derivative,
    _second_derivative,
    alpha_value,
    conf_derivative,
    conf_integral,
    conf_second_derivative,
)
from .errors import DomainError
from .hydrogen import (
    ModelParams,
    QuantumNumbers,
    energy_level,
    full_wavefunction,
    radial_wavefunction,
    radial_with_derivatives,
    scaled_problem,
    u_with_derivatives,
)
from .reference import TEXTBOOK_RADIAL, textbook_spherical_harmonic
from .special import (
    LaguerreParams,
    LegendreParams,
    conf_laguerre,
    conf_laguerre_rodrigues_oracle,
    laguerre_assoc_du,
    laguerre_assoc_du2,
    laguerre_assoc,
    laguerre_orthogonality_constant,
    legendre_assoc,
    legendre_assoc_dz,
    legendre_assoc_dz2,
)

_POLE_MARGIN = 1e-3
_TINY = 1e-290


@dataclass(frozen=True)
class ResidualReport:
    max_abs_residual: float
    max_rel_residual: float
    worst_point: float
    grid_size: int
    derivative_mode: str
    term_scale: float = 0.0  # largest single-term magnitude seen on the grid

    def to_dict(self) -> dict:
        return asdict(self)


def default_grid(lo: float = 1e-3, hi: float = 30.0, points: int = 200) -> np.ndarray:
    """Geometric grid resolving both the power-law region and the tail."""
    return np.geomspace(lo, hi, points)


def _report(abs_res, terms_max, grid, mode: str) -> ResidualReport:
    # Points where every term is tiny compared to the global term scale are
    # numerically degenerate (interior zeros of the solution): cancellation
    # there is unmeasurable, so the denominator is floored at the derivative
    # noise level of the mode in use.
    scale = float(np.max(terms_max))
    eps = float(np.finfo(float).eps)
    noise = math.sqrt(eps) if mode == "analytic" else eps**0.25
    floor = max(noise * scale, _TINY)
    rel = abs_res / np.maximum(terms_max, floor)
    i = int(np.argmax(rel))
    return ResidualReport(
        max_abs_residual=float(np.max(abs_res)),
        max_rel_residual=float(rel[i]),
        worst_point=float(grid[i]),
        grid_size=len(grid),
        derivative_mode=mode,
        term_scale=scale,
    )


def _fd_triple(f):
    """Central-difference first and second derivatives of a scalar function."""
    base = Differentiable(f)
    return (
        f,
        lambda t: _first_derivative(base, t),
        lambda t: _second_derivative(base, t),
    )


def _solution_triple(base_f, base_df, base_d2f, mode, perturbation):
    """(f, f', f'') of the possibly perturbed solution in the requested mode."""
    if mode == "analytic":
        if perturbation is None:
            return base_f, base_df, base_d2f
        p, dp, d2p = perturbation.f, perturbation.df, perturbation.d2f
        if dp is None or d2p is None:
            raise ValueError(
                "perturbation needs analytic derivatives in analytic mode"
            )
        return (
            lambda t: base_f(t) * p(t),
            lambda t: base_df(t) * p(t) + base_f(t) * dp(t),
            lambda t: base_d2f(t) * p(t)
            + 2.0 * base_df(t) * dp(t)
            + base_f(t) * d2p(t),
        )
    if mode == "finite_difference":
        if perturbation is None:
            return _fd_triple(base_f)
        pf = perturbation.f
        return _fd_triple(lambda t: base_f(t) * pf(t))
    raise ValueError(f"unknown derivative mode {mode!r}")


def tilt_perturbation(strength: float = 0.01) -> Differentiable:
    """Smooth multiplicative fault (1 + strength * t) used as a negative control."""
    return Differentiable(
        f=lambda t: 1.0 + strength * t,
        df=lambda t: strength,
        d2f=lambda t: 0.0,
    )


def radial_ode_residual(
    qn: QuantumNumbers,
    params: ModelParams,
    grid=None,
    mode: str = "analytic",
    perturbation: Optional[Differentiable] = None,
) -> ResidualReport:
    """Residual of D^a[r^(2a) D^a R] + (-k^2 r^(2a) + 2 lam k r^a - a^2 l(l+1)) R."""
    if grid is None:
        grid = default_grid()
    grid = np.asarray(grid, dtype=float)
    a = params.alpha.value
    prob = scaled_problem(qn, params)
    k, lam, l = prob.k, prob.lambda_alpha, qn.l

    f, df, d2f = _solution_triple(
        lambda t: radial_wavefunction(qn, params, t),
        lambda t: radial_with_derivatives(qn, params, t)[1],
        lambda t: radial_with_derivatives(qn, params, t)[2],
        mode,
        perturbation,
    )
    Rdiff = Differentiable(f, df, d2f)
    # h(r) = r^(2a) D^a R = r^(a+1) R'(r); its classical derivative follows
    # from the solution derivatives so the outer operator does not nest
    # finite differences inside finite differences
    h = Differentiable(
        f=lambda t: t ** (2.0 * a) * conf_derivative(Rdiff, a, t),
        df=lambda t: (a + 1.0) * t**a * df(t) + t ** (a + 1.0) * d2f(t),
    )

    abs_res = np.empty_like(grid)
    tmax = np.empty_like(grid)
    for i, r in enumerate(grid):
        t1 = conf_derivative(h, a, float(r))
        Rv = f(float(r))
        t2 = -(k * k) * r ** (2.0 * a) * Rv
        t3 = 2.0 * lam * k * r**a * Rv
        t4 = -(a * a) * l * (l + 1) * Rv
        abs_res[i] = abs(t1 + t2 + t3 + t4)
        tmax[i] = max(abs(t1), abs(t2), abs(t3), abs(t4))
    return _report(abs_res, tmax, grid, mode)


def u_ode_residual(
    qn: QuantumNumbers,
    params: ModelParams,
    grid=None,
    mode: str = "analytic",
    perturbation: Optional[Differentiable] = None,
) -> ResidualReport:
    """Residual of D^a D^a u + (-1/4 + lam/rho^a - a^2 l(l+1)/rho^(2a)) u."""
    if grid is None:
        grid = default_grid()
    grid = np.asarray(grid, dtype=float)
    a = params.alpha.value
    prob = scaled_problem(qn, params)
    lam, l = prob.lambda_alpha, qn.l

    f, df, d2f = _solution_triple(
        lambda t: u_with_derivatives(qn, params, t)[0],
        lambda t: u_with_derivatives(qn, params, t)[1],
        lambda t: u_with_derivatives(qn, params, t)[2],
        mode,
        perturbation,
    )
    udiff = Differentiable(f, df, d2f)

    abs_res = np.empty_like(grid)
    tmax = np.empty_like(grid)
    for i, rho in enumerate(grid):
        uv = udiff.f(float(rho))
        t1 = conf_second_derivative(udiff, a, float(rho))
        t2 = -0.25 * uv
        t3 = lam / rho**a * uv
        t4 = -(a * a) * l * (l + 1) / rho ** (2.0 * a) * uv
        abs_res[i] = abs(t1 + t2 + t3 + t4)
        tmax[i] = max(abs(t1), abs(t2), abs(t3), abs(t4))
    return _report(abs_res, tmax, grid, mode)


def laguerre_ode_residual(
    qn: QuantumNumbers,
    params: ModelParams,
    grid=None,
    mode: str = "analytic",
) -> ResidualReport:
    """Residual of the conformable associated Laguerre equation for v = L_{s a}^m."""
    if grid is None:
        grid = default_grid(0.5, 10.0, 200)
    grid = np.asarray(grid, dtype=float)
    a = params.alpha.value
    s, m = qn.n - qn.l - 1, 2 * qn.l + 1
    lam, l = qn.n * a, qn.l
    lp = LaguerreParams(s, m)

    f, df, d2f = _solution_triple(
        lambda t: float(laguerre_assoc(lp, t**a / a)),
        lambda t: float(laguerre_assoc_du(lp, t**a / a)) * t ** (a - 1.0),
        lambda t: (
            float(laguerre_assoc_du2(lp, t**a / a)) * t ** (2.0 * a - 2.0)
            + (a - 1.0) * float(laguerre_assoc_du(lp, t**a / a)) * t ** (a - 2.0)
        ),
        mode,
        None,
    )
    vdiff = Differentiable(f, df, d2f)

    abs_res = np.empty_like(grid)
    tmax = np.empty_like(grid)
    for i, rho in enumerate(grid):
        rho = float(rho)
        vv = f(rho)
        t1 = rho**a * conf_second_derivative(vdiff, a, rho)
        t2 = (2.0 * a * l + 2.0 * a - rho**a) * conf_derivative(vdiff, a, rho)
        t3 = (lam - a * (l + 1)) * vv
        abs_res[i] = abs(t1 + t2 + t3)
        tmax[i] = max(abs(t1), abs(t2), abs(t3))
    return _report(abs_res, tmax, grid, mode)


def angular_ode_residual(
    l: int,
    m_l: int,
    alpha: AlphaLike,
    theta_grid=None,
    mode: str = "analytic",
) -> ResidualReport:
    """Residual of the conformable angular equation for the Legendre factor.

    The azimuthal factor e^(i m phi^alpha) contributes -m^2 alpha^2 /
    sin^2(theta^alpha) after twice-iterated conformable differentiation, so
    only the polar factor P(cos(theta^alpha)) is differentiated here.  The
    check is insensitive to the overall normalization constant.
    """
    a = alpha_value(alpha)
    if theta_grid is None:
        x = np.linspace(0.05, math.pi - 0.05, 181)
        theta_grid = x ** (1.0 / a)
    theta_grid = np.asarray(theta_grid, dtype=float)
    x = theta_grid**a
    if np.any(np.abs(np.sin(x)) < _POLE_MARGIN):
        raise DomainError(
            f"theta grid too close to the poles (margin {_POLE_MARGIN:g})"
        )
    mm = abs(m_l)
    lp = LegendreParams(l, mm)

    def _p(t):
        return float(legendre_assoc(lp, math.cos(t**a)))

    def _dp(t):
        if l == 0:
            return 0.0
        xv = t**a
        z = math.cos(xv)
        return -math.sin(xv) * float(legendre_assoc_dz(lp, z)) * a * t ** (a - 1.0)

    def _d2p(t):
        if l == 0:
            return 0.0
        xv = t**a
        z, sx = math.cos(xv), math.sin(xv)
        pz = float(legendre_assoc_dz(lp, z))
        pzz = float(legendre_assoc_dz2(lp, z))
        return (
            -(a * a) * z * pz * t ** (2.0 * a - 2.0)
            + (a * a) * sx * sx * pzz * t ** (2.0 * a - 2.0)
            - a * (a - 1.0) * sx * pz * t ** (a - 2.0)
        )

    f, df, d2f = _solution_triple(_p, _dp, _d2p, mode, None)
    pdiff = Differentiable(f, df, d2f)
    hdiff = Differentiable(
        f=lambda t: math.sin(t**a) * conf_derivative(pdiff, a, t),
        df=lambda t: (
            math.cos(t**a) * a * df(t)
            + math.sin(t**a)
            * ((1.0 - a) * t ** (-a) * df(t) + t ** (1.0 - a) * d2f(t))
        ),
    )

    abs_res = np.empty_like(theta_grid)
    tmax = np.empty_like(theta_grid)
    for i, th in enumerate(theta_grid):
        th = float(th)
        sx = math.sin(th**a)
        pv = f(th)
        t1 = conf_derivative(hdiff, a, th) / sx
        t2 = -(mm * mm) * a * a * pv / (sx * sx)
        t3 = a * a * l * (l + 1) * pv
        abs_res[i] = abs(t1 + t2 + t3)
        tmax[i] = max(abs(t1), abs(t2), abs(t3))
    return _report(abs_res, tmax, theta_grid, mode)


def normalization_report(qn: QuantumNumbers, params: ModelParams) -> float:
    """Value of the conformable normalization integral (target 1)."""
    a = params.alpha.value

    def integrand(r):
        R = radial_wavefunction(qn, params, r)
        return r ** (2.0 * a) * R * R

    return conf_integral(integrand, a, 0.0, math.inf)


def classical_limit_report(n_max: int, alpha: AlphaLike = 1.0) -> float:
    """Max deviation from the textbook hydrogen closed forms at the given order.

    At alpha = 1 this certifies the classical limit; evaluating at a nearby
    order (e.g. 0.999) serves as a sensitivity control.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > 3:
        raise ValueError("textbook reference forms are tabulated for n <= 3")
    a = alpha_value(alpha)
    params = ModelParams.natural(a)
    r = default_grid(1e-3, 20.0, 200)
    theta = np.full_like(r, 1.1)
    phi = np.full_like(r, 0.7)
    worst = 0.0
    for n in range(1, n_max + 1):
        for l in range(n):
            ref_R = TEXTBOOK_RADIAL[(n, l)](r)
            got_R = radial_wavefunction(QuantumNumbers(n, l), params, r)
            worst = max(worst, float(np.max(np.abs(got_R - ref_R))))
            for m_l in range(-l, l + 1):
                qn = QuantumNumbers(n, l, m_l)
                ref = ref_R * textbook_spherical_harmonic(l, m_l, theta, phi)
                got = full_wavefunction(qn, params, r, theta, phi)
                worst = max(worst, float(np.max(np.abs(got - ref))))
    return worst


# ---------------------------------------------------------------------------
# verification suite (consumed by the CLI `verify` command)

def _alpha_list(level: str):
    return [0.5, 1.0] if level == "quick" else [0.5, 0.6, 0.7, 0.8, 0.9, 1.0]


def run_verification(
    level: str = "quick",
    perturbation: Optional[Differentiable] = None,
) -> dict:
    """Run the full certification battery; returns a JSON-serializable report.

    ``perturbation`` multiplies the radial solution in the residual and
    normalization checks; a non-trivial perturbation must make the report
    fail (negative control).
    """
    if level not in ("quick", "full"):
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    t0 = time.time()
    checks = []

    def add(name: str, measured: float, threshold: float, larger_ok: bool = False):
        ok = measured >= threshold if larger_ok else measured <= threshold
        checks.append(
            {
                "name": name,
                "measured": float(measured),
                "threshold": float(threshold),
                "comparison": ">=" if larger_ok else "<=",
                "passed": bool(ok),
            }
        )

    n_norm = 2 if level == "quick" else 5
    n_ode = 2 if level == "quick" else 4
    alphas = _alpha_list(level)
    ode_alphas = [0.5, 1.0] if level == "quick" else [0.5, 0.75, 1.0]

    # classical limit
    dev = classical_limit_report(2 if level == "quick" else 3)
    add("classical_limit_wavefunctions", dev, 1e-12)
    e_dev = max(
        abs(energy_level(n, 1.0) - (-13.6 / n**2)) for n in range(1, 11)
    )
    add("classical_limit_energies", e_dev, 1e-12)

    # normalization
    worst = 0.0
    for a in alphas:
        params = ModelParams.natural(a)
        for n in range(1, n_norm + 1):
            for l in range(n):
                worst = max(
                    worst, abs(normalization_report(QuantumNumbers(n, l), params) - 1.0)
                )
    add("radial_normalization", worst, 1e-8)

    # weighted Laguerre integral identity (diagonal closed form)
    s_max, m_max = (2, 3) if level == "quick" else (3, 5)
    worst = 0.0
    for a in ode_alphas:
        for s in range(s_max + 1):
            for m in range(m_max + 1):
                lp = LaguerreParams(s, m)
                lhs = conf_integral(
                    lambda x, lp=lp, a=a: np.exp(-(x**a) / a)
                    * x ** (m * a + a)
                    * np.asarray(conf_laguerre(lp, a, x)) ** 2,
                    a,
                    0.0,
                    math.inf,
                )
                rhs = laguerre_orthogonality_constant(lp, a)
                worst = max(worst, abs(lhs - rhs) / abs(rhs))
    add("laguerre_integral_identity", worst, 1e-8)

    # Rodrigues oracle equivalence
    worst = 0.0
    for a in ode_alphas:
        for s in range(s_max + 1):
            for m in range(m_max + 1):
                lp = LaguerreParams(s, m)
                for x in (0.5, 1.0, 2.0, 5.0):
                    worst = max(
                        worst,
                        abs(
                            conf_laguerre(lp, a, x)
                            - conf_laguerre_rodrigues_oracle(lp, a, x)
                        ),
                    )
    add("rodrigues_oracle_equivalence", worst, 1e-5)

    # ODE residuals
    worst_r = worst_u = worst_v = 0.0
    for a in ode_alphas:
        params = ModelParams.natural(a)
        for n in range(1, n_ode + 1):
            for l in range(n):
                qn = QuantumNumbers(n, l)
                worst_r = max(
                    worst_r,
                    radial_ode_residual(
                        qn, params, perturbation=perturbation
                    ).max_rel_residual,
                )
                worst_u = max(
                    worst_u,
                    u_ode_residual(
                        qn, params, perturbation=perturbation
                    ).max_rel_residual,
                )
                worst_v = max(
                    worst_v, laguerre_ode_residual(qn, params).max_rel_residual
                )
    add("radial_ode_residual", worst_r, 1e-6)
    add("u_ode_residual", worst_u, 1e-6)
    add("laguerre_ode_residual", worst_v, 1e-6)

    worst_a = 0.0
    for a in ode_alphas:
        for l in range(0, 3):
            for m_l in range(0, l + 1):
                worst_a = max(
                    worst_a, angular_ode_residual(l, m_l, a).max_rel_residual
                )
    add("angular_ode_residual", worst_a, 1e-5)

    # negative control: a perturbed radial solution must fail loudly
    control = radial_ode_residual(
        QuantumNumbers(2, 0),
        ModelParams.natural(0.75),
        perturbation=tilt_perturbation(),
    ).max_rel_residual
    add("negative_control_residual", control, 100.0 * max(worst_r, 1e-12), larger_ok=True)

    passed = all(c["passed"] for c in checks)
    return {
        "schema_version": 1,
        "command": "verify",
        "level": level,
        "passed": passed,
        "elapsed_seconds": round(time.time() - t0, 3),
        "checks": checks,
    }
