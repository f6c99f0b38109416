import math

import numpy as np
import pytest

from confhydro.calculus import conf_integral
from confhydro.errors import DomainError
from confhydro.hydrogen import (
    ModelParams,
    QuantumNumbers,
    angular_Y,
    energy_level,
    full_wavefunction,
    probability_density_radial,
    radial_wavefunction,
    radial_with_derivatives,
    scaled_problem,
    u_function,
    u_with_derivatives,
)
from confhydro.reference import (
    PSI_CLOSED_FORMS,
    RADIAL_CLOSED_FORMS,
    TEXTBOOK_RADIAL,
    textbook_spherical_harmonic,
)

TABLE_ALPHAS = [0.5, 0.75, 1.0]
R_GRID = np.linspace(0.2, 15.0, 50)


class TestQuantumNumbers:
    @pytest.mark.parametrize("n,l,m", [(0, 0, 0), (1, 1, 0), (2, 1, 2), (3, -1, 0)])
    def test_selection_rules(self, n, l, m):
        with pytest.raises(ValueError):
            QuantumNumbers(n, l, m)

    def test_valid_states(self):
        QuantumNumbers(3, 2, -2)
        QuantumNumbers(1, 0, 0)


class TestModelParams:
    def test_natural_forces_unit_radius(self):
        p = ModelParams.natural(0.7)
        assert p.r_b_alpha == 1.0 and p.mode == "natural"
        with pytest.raises(ValueError):
            ModelParams(alpha=p.alpha, r_b_alpha=2.0)

    def test_physical_mode(self):
        p = ModelParams.physical(0.7, 0.529)
        assert p.r_b_alpha == pytest.approx(0.529)
        with pytest.raises(ValueError):
            ModelParams.physical(0.7, -1.0)

    def test_bad_mode(self):
        p = ModelParams.natural(0.7)
        with pytest.raises(ValueError):
            ModelParams(alpha=p.alpha, mode="weird")


class TestEnergyLevels:
    def test_classical_values(self):
        assert energy_level(1, 1.0) == pytest.approx(-13.6, abs=1e-12)
        assert energy_level(2, 1.0) == pytest.approx(-3.4, abs=1e-12)
        assert energy_level(3, 1.0) == pytest.approx(-13.6 / 9.0, abs=1e-12)

    def test_fractional_values(self):
        # frozen from -(13.6)^a / (2^(1-a) a^2 n^2) evaluated independently
        assert energy_level(1, 0.5) == pytest.approx(-10.430723848324238, rel=1e-14)
        assert energy_level(2, 0.75) == pytest.approx(-2.646757572253635, rel=1e-14)

    def test_formula_cross_check(self):
        for a in (0.5, 0.6, 0.9, 1.0):
            for n in (1, 2, 5):
                want = -(13.6**a) / (2.0 ** (1.0 - a) * a * a * n * n)
                assert energy_level(n, a) == pytest.approx(want, rel=1e-15)

    def test_monotone_in_n(self):
        for a in (0.5, 0.8, 1.0):
            levels = [energy_level(n, a) for n in range(1, 8)]
            assert all(e < 0 for e in levels)
            assert all(b > c for c, b in zip(levels, levels[1:]))

    def test_invalid_n(self):
        with pytest.raises(ValueError):
            energy_level(0, 0.5)


class TestScaledProblem:
    def test_parameters(self):
        prob = scaled_problem(QuantumNumbers(3, 1), ModelParams.natural(0.5))
        assert prob.k == pytest.approx(1.0 / (0.5 * 3.0))
        assert prob.lambda_alpha == pytest.approx(1.5)

    def test_coordinate_map(self):
        prob = scaled_problem(QuantumNumbers(2, 0), ModelParams.natural(0.5))
        got = prob.rho_alpha_of_r(4.0, 0.5)
        assert got == pytest.approx(2.0 * prob.k * 2.0)


class TestRadialWavefunction:
    def test_classical_limit_matches_textbook(self):
        p = ModelParams.natural(1.0)
        for (n, l), ref in TEXTBOOK_RADIAL.items():
            got = radial_wavefunction(QuantumNumbers(n, l), p, R_GRID)
            np.testing.assert_allclose(got, ref(R_GRID), rtol=1e-12, atol=1e-12)

    def test_frozen_point_value(self):
        # R_{2 1} at r=2, alpha=0.5; frozen after cross-checking against the
        # published closed form for that state
        got = radial_wavefunction(QuantumNumbers(2, 1), ModelParams.natural(0.5), 2.0)
        assert got == pytest.approx(0.38607711984814364, rel=1e-13)

    @pytest.mark.parametrize("alpha", TABLE_ALPHAS)
    def test_published_radial_closed_forms(self, alpha):
        p = ModelParams.natural(alpha)
        for (n, l), closed in RADIAL_CLOSED_FORMS.items():
            got = radial_wavefunction(QuantumNumbers(n, l), p, R_GRID)
            want = closed(alpha, 1.0, R_GRID)
            assert np.max(np.abs(got - want)) <= 1e-12 * max(1.0, np.max(np.abs(want)))

    def test_domain_error(self):
        with pytest.raises(DomainError):
            radial_wavefunction(QuantumNumbers(1, 0), ModelParams.natural(0.5), 0.0)

    @pytest.mark.parametrize("n,l", [(1, 0), (2, 1), (4, 2)])
    def test_derivatives_against_fd(self, n, l):
        p = ModelParams.natural(0.7)
        qn = QuantumNumbers(n, l)
        r = np.array([0.8, 2.4, 6.0])
        R, dR, d2R = radial_with_derivatives(qn, p, r)
        np.testing.assert_allclose(R, radial_wavefunction(qn, p, r), rtol=1e-14)
        h = 1e-6
        fd1 = (radial_wavefunction(qn, p, r + h) - radial_wavefunction(qn, p, r - h)) / (
            2 * h
        )
        np.testing.assert_allclose(dR, fd1, rtol=1e-7, atol=1e-10)
        h2 = 1e-4
        fd2 = (
            radial_wavefunction(qn, p, r + h2)
            - 2 * radial_wavefunction(qn, p, r)
            + radial_wavefunction(qn, p, r - h2)
        ) / (h2 * h2)
        np.testing.assert_allclose(d2R, fd2, rtol=1e-5, atol=1e-7)

    @pytest.mark.parametrize("alpha", [0.5, 0.75, 0.9, 1.0])
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_normalization(self, alpha, n):
        p = ModelParams.natural(alpha)
        for l in range(n):
            qn = QuantumNumbers(n, l)

            def integrand(r):
                R = np.asarray(radial_wavefunction(qn, p, r), dtype=float)
                return r ** (2.0 * alpha) * R * R

            total = conf_integral(integrand, alpha, 0.0, math.inf)
            assert total == pytest.approx(1.0, abs=1e-8)

    @pytest.mark.parametrize("alpha", [0.5, 1.0])
    def test_radial_orthogonality(self, alpha):
        p = ModelParams.natural(alpha)
        pairs = [((2, 0), (3, 0)), ((2, 1), (3, 1)), ((3, 0), (4, 0)), ((3, 2), (4, 2))]
        for (n1, l), (n2, _) in pairs:
            q1, q2 = QuantumNumbers(n1, l), QuantumNumbers(n2, l)

            def integrand(r):
                R1 = np.asarray(radial_wavefunction(q1, p, r), dtype=float)
                R2 = np.asarray(radial_wavefunction(q2, p, r), dtype=float)
                return r ** (2.0 * alpha) * R1 * R2

            total = conf_integral(integrand, alpha, 0.0, math.inf)
            assert abs(total) <= 1e-7


class TestScaledSolution:
    @pytest.mark.parametrize("alpha", [0.5, 0.75, 1.0])
    @pytest.mark.parametrize("n,l", [(1, 0), (2, 1), (3, 1), (4, 3)])
    def test_relation_to_radial(self, alpha, n, l):
        # R(r) = 2k u(rho) / rho^alpha with rho^alpha = 2k r^alpha
        p = ModelParams.natural(alpha)
        qn = QuantumNumbers(n, l)
        prob = scaled_problem(qn, p)
        for r in (0.6, 1.7, 5.0):
            rho = (2.0 * prob.k) ** (1.0 / alpha) * r
            rho_a = 2.0 * prob.k * r**alpha
            lhs = radial_wavefunction(qn, p, r)
            rhs = 2.0 * prob.k * u_function(qn, p, rho) / rho_a
            assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_derivatives_against_fd(self):
        p = ModelParams.natural(0.6)
        qn = QuantumNumbers(3, 1)
        rho = 2.2
        u, du, d2u = u_with_derivatives(qn, p, rho)
        h = 1e-6
        up = u_function(qn, p, rho + h)
        um = u_function(qn, p, rho - h)
        assert du == pytest.approx((up - um) / (2 * h), rel=1e-7)
        h2 = 1e-4
        up = u_function(qn, p, rho + h2)
        um = u_function(qn, p, rho - h2)
        assert d2u == pytest.approx((up - 2 * u + um) / (h2 * h2), rel=1e-5)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            u_function(QuantumNumbers(1, 0), ModelParams.natural(0.5), -1.0)


class TestAngular:
    def test_classical_limit_matches_textbook(self):
        th, ph = 1.1, 0.7
        for l in range(3):
            for m in range(-l, l + 1):
                qn = QuantumNumbers(l + 1, l, m)
                got = angular_Y(qn, 1.0, th, ph)
                want = textbook_spherical_harmonic(l, m, th, ph)
                assert got == pytest.approx(complex(want), abs=1e-14)

    def test_frozen_point_value(self):
        # constant harmonic at alpha=0.5: alpha / sqrt(2 (2 pi)^alpha)
        got = angular_Y(QuantumNumbers(1, 0, 0), 0.5, 1.2, 0.3)
        assert got == pytest.approx(0.22331096043450058, rel=1e-13)
        assert got == pytest.approx(0.5 / math.sqrt(2.0 * (2.0 * math.pi) ** 0.5))

    def test_negative_order_conjugation(self):
        # Y_l^{-m} = (-1)^m alpha^(2m) conj(Y_l^m)
        a, th, ph = 0.75, 1.3, 0.9
        for l, m in [(1, 1), (2, 1), (2, 2), (3, 2)]:
            plus = angular_Y(QuantumNumbers(l + 1, l, m), a, th, ph)
            minus = angular_Y(QuantumNumbers(l + 1, l, -m), a, th, ph)
            want = (-1.0) ** m * a ** (2 * m) * np.conj(plus)
            assert minus == pytest.approx(want, rel=1e-12)

    def test_domain_errors(self):
        qn = QuantumNumbers(2, 1, 0)
        with pytest.raises(DomainError):
            angular_Y(qn, 0.5, 0.0, 0.3)
        with pytest.raises(DomainError):
            angular_Y(qn, 0.5, 1.0, -0.1)
        with pytest.raises(DomainError):
            angular_Y(qn, 0.5, (math.pi + 0.5) ** 2, 0.3)
        with pytest.raises(DomainError):
            angular_Y(qn, 0.5, 1.0, (2.0 * math.pi + 0.5) ** 2)


class TestFullWavefunction:
    @pytest.mark.parametrize("alpha", TABLE_ALPHAS)
    def test_published_psi_closed_forms(self, alpha):
        p = ModelParams.natural(alpha)
        theta = 1.1 ** (1.0 / alpha)
        phi = 0.7 ** (1.0 / alpha)
        for (n, l, m), closed in PSI_CLOSED_FORMS.items():
            qn = QuantumNumbers(n, l, m)
            got = full_wavefunction(qn, p, R_GRID, theta, phi)
            want = np.asarray(closed(alpha, 1.0, R_GRID, theta, phi), dtype=complex)
            scale = max(1.0, float(np.max(np.abs(want))))
            assert np.max(np.abs(got - want)) <= 1e-12 * scale

    def test_product_structure(self):
        p = ModelParams.natural(0.6)
        qn = QuantumNumbers(3, 2, -1)
        got = full_wavefunction(qn, p, 1.8, 1.0, 0.5)
        want = radial_wavefunction(qn, p, 1.8) * angular_Y(qn, 0.6, 1.0, 0.5)
        assert got == pytest.approx(want, rel=1e-14)


class TestDensity:
    def test_ground_state_peak_at_bohr_radius(self):
        p = ModelParams.natural(1.0)
        grid = np.linspace(0.01, 5.0, 2000)
        curve = probability_density_radial(QuantumNumbers(1, 0), p, grid)
        assert grid[np.argmax(curve.values)] == pytest.approx(1.0, abs=5e-3)

    @pytest.mark.parametrize("alpha", [0.5, 0.8, 1.0])
    @pytest.mark.parametrize("n,l", [(1, 0), (2, 1), (3, 2)])
    def test_density_integrates_to_one(self, alpha, n, l):
        p = ModelParams.natural(alpha)
        qn = QuantumNumbers(n, l)

        def integrand(r):
            c = probability_density_radial(qn, p, np.atleast_1d(r))
            return c.values

        total = conf_integral(integrand, alpha, 0.0, math.inf)
        assert total == pytest.approx(1.0, abs=1e-8)

    @pytest.mark.parametrize("n,l", [(1, 0), (2, 1), (3, 2)])
    def test_converges_to_classical_curve(self, n, l):
        # max-norm distance to the alpha=1 curve shrinks as alpha -> 1
        grid = np.linspace(0.05, 20.0, 400)
        qn = QuantumNumbers(n, l)
        ref = probability_density_radial(qn, ModelParams.natural(1.0), grid).values
        gaps = []
        for a in (0.6, 0.8, 0.9):
            cur = probability_density_radial(qn, ModelParams.natural(a), grid).values
            gaps.append(float(np.max(np.abs(cur - ref))))
        assert gaps[0] > gaps[1] > gaps[2]

    def test_grid_validation(self):
        p = ModelParams.natural(0.5)
        qn = QuantumNumbers(1, 0)
        with pytest.raises(ValueError):
            probability_density_radial(qn, p, np.array([1.0, 0.5]))
        with pytest.raises(ValueError):
            probability_density_radial(qn, p, np.array([0.0, 1.0]))
        with pytest.raises(ValueError):
            probability_density_radial(qn, p, np.array([]))
