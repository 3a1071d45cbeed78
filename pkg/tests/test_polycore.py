import math

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from xhdirac.polycore import (
    ExactPoly,
    hermite_classical,
    poly_divexact,
    wronskian,
)


def sympy_hermite_coeffs(n):
    x = sp.Symbol("x")
    p = sp.Poly(sp.hermite(n, x), x)
    return tuple(int(c) for c in reversed(p.all_coeffs()))


class TestExactPoly:
    def test_canonical_zero_is_empty(self):
        assert ExactPoly((0, 0, 0)).coeffs == ()
        assert ExactPoly().is_zero()
        assert ExactPoly((0,)).degree == -1

    def test_trailing_zeros_stripped(self):
        p = ExactPoly((1, 2, 0, 0))
        assert p.coeffs == (1, 2)
        assert p.degree == 1

    def test_arithmetic(self):
        p = ExactPoly((1, 1))   # 1 + x
        q = ExactPoly((1, -1))  # 1 - x
        assert (p * q).coeffs == (1, 0, -1)
        assert (p + q).coeffs == (2,)
        assert (p - q).coeffs == (0, 2)
        assert p.scale(3).coeffs == (3, 3)

    def test_derivative(self):
        assert ExactPoly((4, 0, 8)).derivative().coeffs == (0, 16)
        assert ExactPoly((5,)).derivative().is_zero()

    def test_eval(self):
        assert ExactPoly((-2, 0, 4)).eval_float(1.0) == 2.0
        assert ExactPoly().eval_float(3.0) == 0.0

    def test_json_round_trip_big_coefficients(self):
        p = hermite_classical(25)
        d = p.to_json_dict()
        assert all(isinstance(s, str) for s in d["coeffs"])
        assert ExactPoly.from_json_dict(d) == p

    def test_divexact(self):
        a = ExactPoly((1, 1)) * ExactPoly((-3, 0, 2))
        assert poly_divexact(a, ExactPoly((1, 1))).coeffs == (-3, 0, 2)
        with pytest.raises(ArithmeticError):
            poly_divexact(ExactPoly((1, 1)), ExactPoly((0, 2)))


class TestHermite:
    def test_base_cases(self):
        assert hermite_classical(0).coeffs == (1,)
        assert hermite_classical(1).coeffs == (0, 2)
        assert hermite_classical(2).coeffs == (-2, 0, 4)

    def test_h5(self):
        assert hermite_classical(5).coeffs == (0, 120, 0, -160, 0, 32)

    @pytest.mark.parametrize("n", range(0, 16))
    def test_against_sympy(self, n):
        assert hermite_classical(n).coeffs == sympy_hermite_coeffs(n)

    @pytest.mark.parametrize("n", range(0, 21))
    def test_defining_equation_exact(self, n):
        h = hermite_classical(n)
        x = ExactPoly((0, 1))
        residual = h.derivative().derivative() - (x * h.derivative()).scale(2) + h.scale(2 * n)
        assert residual.is_zero()

    @pytest.mark.parametrize("n", range(0, 21))
    def test_parity(self, n):
        h = hermite_classical(n)
        # coefficient slots of the wrong parity must vanish exactly
        for j, c in enumerate(h.coeffs):
            if (j - n) % 2 != 0:
                assert c == 0

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            hermite_classical(-1)


small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=5).map(
    lambda cs: ExactPoly(tuple(cs))
)


class TestWronskian:
    def test_pair(self):
        w = wronskian([hermite_classical(1), hermite_classical(2)])
        assert w.coeffs == (4, 0, 8)

    def test_repeated_entry_vanishes(self):
        w = wronskian([hermite_classical(1), hermite_classical(2), hermite_classical(2)])
        assert w.is_zero()

    def test_three_by_three_constant(self):
        w = wronskian([hermite_classical(1), hermite_classical(2), hermite_classical(0)])
        assert w.coeffs == (16,)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            wronskian([])

    def test_single_entry_is_identity(self):
        p = ExactPoly((3, 1, 2))
        assert wronskian([p]) == p

    @settings(max_examples=40, deadline=None)
    @given(a=small_polys, b=small_polys, c=small_polys)
    def test_alternating(self, a, b, c):
        assert wronskian([a, b, c]) == -wronskian([b, a, c])

    @pytest.mark.parametrize(
        "indices", [(0, 1), (1, 3), (0, 2, 5), (1, 2, 4, 7), (0, 1, 2, 3, 4)]
    )
    def test_degree_formula_distinct_hermites(self, indices):
        fs = [hermite_classical(i) for i in indices]
        w = wronskian(fs)
        t = len(indices)
        assert not w.is_zero()
        assert w.degree == sum(indices) - t * (t - 1) // 2

    def test_bareiss_matches_cofactor(self):
        fs = [hermite_classical(i) for i in (0, 1, 2, 3)]
        by_bareiss = wronskian(fs)
        # 4x4 minors by cofactor expansion along the first column of the
        # derivative matrix, assembled independently
        x = sp.Symbol("x")
        mat = sp.Matrix(
            4, 4,
            lambda i, j: sp.diff(sp.hermite(j, x), x, i),
        )
        det = sp.Poly(mat.det(), x)
        expected = tuple(int(c) for c in reversed(det.all_coeffs()))
        assert by_bareiss.coeffs == expected
