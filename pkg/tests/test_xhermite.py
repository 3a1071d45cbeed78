import math

import numpy as np
import pytest

from xhdirac.polycore import ExactPoly, hermite_classical
from xhdirac.numerics import Grid
from xhdirac.xhermite import (
    AdmissibilityError,
    NonEvenPartitionError,
    Partition,
    QuadratureConvergenceError,
    XHermiteFamily,
    admissible_degrees,
    h_lambda,
    ode_residual_polynomial,
    orthogonality_integral,
    weighted_product_residual,
    zero_free_check,
)


@pytest.fixture(scope="module")
def fam11():
    return XHermiteFamily(Partition((1, 1)), n_max=12)


class TestPartition:
    def test_valid(self):
        p = Partition((3, 2, 2, 1))
        assert p.size == 8 and p.length == 4
        assert not p.is_even()

    def test_even(self):
        assert Partition((1, 1)).is_even()
        assert Partition((2, 2)).is_even()
        assert Partition((2, 2, 1, 1)).is_even()
        assert not Partition((2, 1)).is_even()
        assert not Partition((1, 1, 1)).is_even()
        assert Partition(()).is_even()

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_gauge_indices(self):
        assert Partition((1, 1)).gauge_indices() == [1, 2]
        assert Partition((2, 2)).gauge_indices() == [2, 3]
        assert Partition((3, 1)).gauge_indices() == [1, 4]


class TestGaugePolynomial:
    def test_pair_partition(self):
        assert h_lambda(Partition((1, 1))).coeffs == (4, 0, 8)

    def test_single_part(self):
        assert h_lambda(Partition((1,))) == hermite_classical(1)

    def test_empty_partition_is_one(self):
        assert h_lambda(Partition(())).coeffs == (1,)

    def test_degree_is_partition_size(self):
        for parts in ((1, 1), (2, 2), (2, 1), (3, 3, 2, 2)):
            p = Partition(parts)
            assert h_lambda(p).degree == p.size

    def test_two_two_even_no_real_zeros(self):
        h = h_lambda(Partition((2, 2)))
        assert h.degree == 4
        assert zero_free_check(h)


class TestAdmissibility:
    def test_one_one(self, fam11):
        assert {n for n in fam11.admissible if n <= 6} == {0, 3, 4, 5, 6}

    def test_single_part(self):
        assert admissible_degrees(Partition((1,)), 3) == {0, 2, 3}

    def test_rejection_reasons(self, fam11):
        with pytest.raises(AdmissibilityError, match="repeats a gauge column"):
            fam11.exceptional_p(2)
        with pytest.raises(AdmissibilityError):
            fam11.exceptional_p(1)

    def test_member_values(self, fam11):
        assert fam11.exceptional_p(0).coeffs == (16,)
        assert fam11.exceptional_p(3).coeffs == (0, 192, 0, 128)

    def test_member_degree_and_parity(self, fam11):
        for n in sorted(fam11.admissible):
            p = fam11.exceptional_p(n)
            assert p.degree == n
            for j, c in enumerate(p.coeffs):
                if (j - n) % 2 != 0:
                    assert c == 0


class TestWeight:
    def test_at_zero(self, fam11):
        assert fam11.weight(0.0) == pytest.approx(1 / 16, rel=1e-15)

    def test_at_one(self, fam11):
        assert fam11.weight(1.0) == pytest.approx(math.exp(-1) / 144, rel=1e-14)

    def test_far_field_decay(self, fam11):
        assert fam11.weight(10.0) < 1e-40
        assert fam11.weight(-10.0) < 1e-40

    def test_positive_on_grid(self, fam11):
        vals = fam11.weight(np.linspace(-6, 6, 1001))
        assert np.all(vals > 0) and np.all(np.isfinite(vals))

    def test_non_even_rejected(self):
        fam = XHermiteFamily(Partition((2, 1)), n_max=4)
        with pytest.raises(NonEvenPartitionError):
            fam.weight(0.5)


class TestDefiningEquation:
    @pytest.mark.parametrize("parts,nmax", [((1, 1), 12), ((2, 2), 10)])
    def test_exact_zero_residual(self, parts, nmax):
        fam = XHermiteFamily(Partition(parts), n_max=nmax)
        for n in sorted(fam.admissible):
            assert ode_residual_polynomial(fam, n).is_zero()

    def test_wrong_eigenvalue_breaks(self, fam11):
        res = ode_residual_polynomial(fam11, 3, eigenvalue_term=2 * (3 - 2) + 1)
        assert not res.is_zero()

    def test_non_admissible_rejected(self, fam11):
        with pytest.raises(AdmissibilityError):
            ode_residual_polynomial(fam11, 1)


class TestOrthogonality:
    def test_pairwise_small(self, fam11):
        i00 = orthogonality_integral(fam11, 0, 0)
        i33 = orthogonality_integral(fam11, 3, 3)
        i03 = orthogonality_integral(fam11, 0, 3)
        i04 = orthogonality_integral(fam11, 0, 4)
        i44 = orthogonality_integral(fam11, 4, 4)
        assert abs(i03) < 1e-10 * math.sqrt(i00 * i33)
        assert abs(i04) < 1e-10 * math.sqrt(i00 * i44)
        assert i33 > 0 and i00 > 0

    def test_convergence_check_bites_at_low_order(self, fam11):
        with pytest.raises(QuadratureConvergenceError):
            orthogonality_integral(fam11, 0, 0, order=40)

    def test_low_order_passes_with_check_disabled(self, fam11):
        val = orthogonality_integral(fam11, 0, 0, order=40, check_convergence=False)
        assert val == pytest.approx(14.1796308, rel=1e-3)


class TestProductIdentity:
    def test_corrected_identity(self, fam11):
        grid = Grid.from_bounds(-4.0, 4.0, 801)
        assert weighted_product_residual(fam11, 0, 3, grid) < 1e-10

    def test_literal_form_off_by_weight(self, fam11):
        grid = Grid.from_bounds(-4.0, 4.0, 801)
        assert weighted_product_residual(fam11, 0, 3, grid, weight_inside=False) >= 1e-2

    def test_classical_limit(self):
        fam = XHermiteFamily(Partition(()), n_max=2)
        grid = Grid.from_bounds(-4.0, 4.0, 801)
        assert weighted_product_residual(fam, 1, 0, grid) < 1e-12
        assert weighted_product_residual(fam, 1, 0, grid, weight_inside=False) > 1e-2

    def test_equal_indices_rejected(self, fam11):
        with pytest.raises(ValueError):
            weighted_product_residual(fam11, 3, 3, Grid.from_bounds(-1, 1, 11))


class TestZeroFree:
    def test_examples(self):
        assert zero_free_check(ExactPoly((4, 0, 8)))
        assert not zero_free_check(hermite_classical(2))
        assert zero_free_check(ExactPoly((16,)))

    def test_zero_poly_rejected(self):
        with pytest.raises(ValueError):
            zero_free_check(ExactPoly())


def _float_hermite(n, x):
    if n == 0:
        return 1.0
    prev, cur = 1.0, 2.0 * x
    for k in range(1, n):
        prev, cur = cur, 2.0 * x * cur - 2.0 * k * prev
    return cur


def _fd_column(n, x, order, h=0.02):
    """order-th derivative of H_n at x from values only, Richardson refined."""

    def stencil(step):
        if order == 0:
            return _float_hermite(n, x)
        if order == 1:
            return (
                _float_hermite(n, x - 2 * step)
                - 8 * _float_hermite(n, x - step)
                + 8 * _float_hermite(n, x + step)
                - _float_hermite(n, x + 2 * step)
            ) / (12 * step)
        return (
            -_float_hermite(n, x - 2 * step)
            + 16 * _float_hermite(n, x - step)
            - 30 * _float_hermite(n, x)
            + 16 * _float_hermite(n, x + step)
            - _float_hermite(n, x + 2 * step)
        ) / (12 * step**2)

    a, b = stencil(h), stencil(h / 2)
    return b + (b - a) / 15.0


class TestFloatingWronskianCrossCheck:
    """Coefficient-level members vs a value-level determinant rebuilt from
    floating Hermite evaluations and finite-difference derivatives."""

    @pytest.mark.parametrize("n", [0, 3, 4, 5, 6])
    def test_agreement(self, fam11, n):
        indices = [1, 2, n]
        xs = np.linspace(-1.9, 1.9, 20)
        p = fam11.exceptional_p(n)
        for x in xs:
            mat = np.array([[_fd_column(j, x, order) for j in indices] for order in range(3)])
            det = float(np.linalg.det(mat))
            exact = p.eval_float(float(x))
            scale = max(abs(exact), 1e-3 * max(abs(c) for c in p.coeffs))
            assert abs(det - exact) / scale < 1e-8
