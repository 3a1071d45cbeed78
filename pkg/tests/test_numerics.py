import math

import numpy as np
import pytest

from xhdirac.polycore import ExactPoly, hermite_classical
from xhdirac.numerics import (
    Grid,
    central_derivative,
    central_second_derivative,
    fd_schrodinger_spectrum,
    gauss_hermite_rule,
    masked_trapezoid_integral,
    poly_values,
    sturm_real_root_count,
    trapezoid_integral,
    trapezoid_integral_excluding,
)

SQRT_PI = math.sqrt(math.pi)


class TestGrid:
    def test_points(self):
        g = Grid.from_bounds(0.0, 1.0, 11)
        pts = g.points
        assert pts[0] == 0.0 and abs(pts[-1] - 1.0) < 1e-15
        assert np.all(np.diff(pts) > 0)

    def test_validation(self):
        with pytest.raises(ValueError):
            Grid(0.0, -0.1, 10)
        with pytest.raises(ValueError):
            Grid(0.0, 0.1, 1)
        with pytest.raises(ValueError):
            Grid.from_bounds(1.0, 0.0, 5)


class TestGaussHermite:
    def test_order_one(self):
        rule = gauss_hermite_rule(1)
        assert rule.nodes.tolist() == [0.0]
        assert abs(rule.weights[0] - SQRT_PI) < 1e-15

    def test_order_two(self):
        rule = gauss_hermite_rule(2)
        assert np.allclose(rule.nodes, [-1 / math.sqrt(2), 1 / math.sqrt(2)])
        assert np.allclose(rule.weights, [SQRT_PI / 2, SQRT_PI / 2])

    def test_gaussian_moment(self):
        rule = gauss_hermite_rule(20)
        assert abs(rule.integrate(lambda x: x**4) - 0.75 * SQRT_PI) < 1e-12

    @pytest.mark.parametrize("order", [4, 7, 12, 33])
    def test_polynomial_exactness(self, order):
        rule = gauss_hermite_rule(order)
        # exact Gaussian moments: int exp(-x^2) x^(2m) = (2m-1)!! sqrt(pi)/2^m
        for j in range(0, 7):
            if j % 2 == 1:
                expected = 0.0
            else:
                m = j // 2
                expected = math.prod(range(1, 2 * m, 2)) * SQRT_PI / 2**m
            got = rule.integrate(lambda x: x**j)
            assert abs(got - expected) <= 1e-12 * max(1.0, abs(expected))

    @pytest.mark.parametrize("order", [2, 5, 16, 51, 100])
    def test_symmetry_positivity_total(self, order):
        rule = gauss_hermite_rule(order)
        assert np.allclose(rule.nodes, -rule.nodes[::-1], atol=0.0)
        assert np.all(rule.weights > 0)
        assert abs(rule.weights.sum() - SQRT_PI) < 1e-12 * SQRT_PI

    def test_order_bounds(self):
        with pytest.raises(ValueError):
            gauss_hermite_rule(0)
        with pytest.raises(ValueError):
            gauss_hermite_rule(1025)


class TestSchrodingerSpectrum:
    def test_harmonic_oscillator(self):
        vals = fd_schrodinger_spectrum(lambda z: z * z, 10.0, 2000, 3)
        assert np.allclose(vals, [1.0, 3.0, 5.0], rtol=1e-3)

    def test_particle_in_a_box(self):
        half = math.pi / 2
        vals = fd_schrodinger_spectrum(lambda z: 0.0 * z, half, 2000, 2)
        expected = [(k * math.pi / (2 * half)) ** 2 for k in (1, 2)]
        assert np.allclose(vals, expected, rtol=1e-3)

    def test_variational_monotone_in_width(self):
        prev = None
        for half_width in (6.0, 8.0, 10.0):
            pts = int(200 * half_width)
            vals = fd_schrodinger_spectrum(lambda z: z * z, half_width, pts, 3)
            if prev is not None:
                assert np.all(vals <= prev + 1e-6)
            prev = vals

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            fd_schrodinger_spectrum(lambda z: z, -1.0, 2000, 2)
        with pytest.raises(ValueError):
            fd_schrodinger_spectrum(lambda z: z, 5.0, 100, 2)
        with pytest.raises(ValueError):
            fd_schrodinger_spectrum(lambda z: np.where(np.abs(z) < 1, np.inf, 0.0), 5.0, 500, 2)


class TestSturm:
    def test_examples(self):
        assert sturm_real_root_count(ExactPoly((4, 0, 8))) == 0
        assert sturm_real_root_count(ExactPoly((-2, 0, 4))) == 2
        assert sturm_real_root_count(ExactPoly((0, 0, 0, 1))) == 1  # x^3, square-free reduced
        assert sturm_real_root_count(ExactPoly((16,))) == 0

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            sturm_real_root_count(ExactPoly())

    def test_hermite_has_n_real_roots(self):
        for n in range(1, 9):
            assert sturm_real_root_count(hermite_classical(n)) == n

    def test_agrees_with_grid_sign_changes(self):
        rng = np.random.default_rng(1234)
        done = 0
        while done < 20:
            deg = int(rng.integers(1, 9))
            coeffs = tuple(int(c) for c in rng.integers(-9, 10, size=deg + 1))
            p = ExactPoly(coeffs)
            if p.degree < 1:
                continue
            # sign changes on a fine grid count simple real roots
            x = np.linspace(-40, 40, 400001)
            vals = poly_values(p, x)
            signs = np.sign(vals)
            nz = signs[signs != 0]
            grid_count = int(np.sum(nz[1:] != nz[:-1]))
            exact = sturm_real_root_count(p)
            # even-multiplicity roots are invisible to sign changes; random
            # integer polynomials are square-free with probability ~1, and
            # odd-degree sign changes can only undercount
            assert grid_count <= exact
            if grid_count == exact:
                done += 1


class TestGridCalculus:
    def test_derivative_of_square(self):
        g = Grid.from_bounds(0.0, 2.0, 2001)
        d = central_derivative(g.points**2, g)
        i = np.argmin(np.abs(g.points - 1.0))
        assert abs(d[i] - 2.0) < 1e-8

    def test_derivative_of_constant(self):
        g = Grid.from_bounds(0.0, 1.0, 101)
        d = central_derivative(np.full(101, 7.0), g)
        assert np.max(np.abs(d)) < 1e-12

    def test_second_derivative(self):
        g = Grid.from_bounds(-1.0, 1.0, 1001)
        v = np.exp(g.points)
        d2 = central_second_derivative(v, g)
        interior = slice(2, -2)
        assert np.max(np.abs(d2[interior] - v[interior])) < 1e-9

    def test_trapezoid(self):
        g = Grid.from_bounds(0.0, 1.0, 1001)
        assert abs(trapezoid_integral(g.points, g) - 0.5) < 1e-9

    def test_small_grid_rejected(self):
        g = Grid.from_bounds(0.0, 1.0, 4)
        with pytest.raises(ValueError):
            central_derivative(np.zeros(4), g)

    def test_masked_trapezoid(self):
        g = Grid.from_bounds(0.0, 1.0, 1001)
        v = np.ones(1001)
        keep = np.ones(1001, dtype=bool)
        keep[400:601] = False
        expected = 0.4 + (1.0 - 0.601)  # two clean runs of the unit integrand
        assert abs(masked_trapezoid_integral(v, g, keep) - expected) < 1e-12

    def test_trapezoid_excluding_window(self):
        g = Grid.from_bounds(0.0, 1.0, 1001)
        v = np.ones(1001)
        total = trapezoid_integral_excluding(v, g, centers=[0.5], radius=0.1)
        assert abs(total - 0.8) < 1e-12

    def test_trapezoid_excluding_refinement_stable(self):
        # integrand with an integrable spike at the window center
        results = []
        for count in (2001, 4001, 8001):
            g = Grid.from_bounds(0.0, 2.0, count)
            x = g.points
            v = 1.0 / np.abs(x - 0.7371) ** 0.5
            results.append(trapezoid_integral_excluding(v, g, centers=[0.7371], radius=0.2))
        assert abs(results[-1] - results[-2]) < 1e-6 * abs(results[-1])
