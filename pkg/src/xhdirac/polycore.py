"""Exact integer polynomials, classical Hermite polynomials, and Wronskians.

Everything here is exact: coefficients are Python ints, so nothing ever
rounds or overflows. Hermite coefficients grow like 2^n n! and Wronskian
entries multiply them, which is why fixed-width arithmetic is off the table.
All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class ExactPoly:
    """Dense univariate polynomial over the integers.

    Coefficients are stored in ascending degree order with trailing zeros
    stripped; the zero polynomial is the empty tuple (canonical form), so
    ``degree`` is -1 for zero and ``len(coeffs) - 1`` otherwise.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = [int(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly(tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "ExactPoly") -> "ExactPoly":
        if self.is_zero() or other.is_zero():
            return ExactPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPoly(tuple(out))

    def scale(self, c: int) -> "ExactPoly":
        return ExactPoly(tuple(c * a for a in self.coeffs))

    def derivative(self) -> "ExactPoly":
        return ExactPoly(tuple(k * self.coeffs[k] for k in range(1, len(self.coeffs))))

    def eval_float(self, x: float) -> float:
        """Horner evaluation in double precision."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return float(acc)

    def __call__(self, x: float) -> float:
        return self.eval_float(x)

    def to_json_dict(self) -> dict:
        # decimal strings: coefficients routinely exceed the 64-bit range
        return {"coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json_dict(d: dict) -> "ExactPoly":
        return ExactPoly(tuple(int(s) for s in d["coeffs"]))


X = ExactPoly((0, 1))
ONE = ExactPoly((1,))


def poly_add(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    return a + b


def poly_mul(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    return a * b


def poly_scale(a: ExactPoly, c: int) -> ExactPoly:
    return a.scale(c)


def poly_derivative(a: ExactPoly) -> ExactPoly:
    return a.derivative()


def poly_eval_float(a: ExactPoly, x: float) -> float:
    return a.eval_float(x)


def poly_divexact(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Quotient a/b when b divides a exactly in Z[x].

    Raises ArithmeticError if the division is inexact. Fraction-free
    elimination guarantees exactness for the calls made here.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ExactPoly()
    if a.degree < b.degree:
        raise ArithmeticError("inexact polynomial division")
    rem = list(a.coeffs)
    out = [0] * (a.degree - b.degree + 1)
    bl = b.leading
    for k in range(a.degree - b.degree, -1, -1):
        c = rem[k + b.degree]
        if c == 0:
            continue
        q, r = divmod(c, bl)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = q
        for j, bc in enumerate(b.coeffs):
            rem[k + j] -= q * bc
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return ExactPoly(tuple(out))


@functools.lru_cache(maxsize=None)
def hermite_classical(n: int) -> ExactPoly:
    """Physicists' Hermite polynomial H_n with exact integer coefficients.

    Generated by H_{n+1} = 2x H_n - 2n H_{n-1} with H_0 = 1, H_1 = 2x.
    """
    if n < 0:
        raise ValueError(f"Hermite index must be non-negative, got {n}")
    if n == 0:
        return ONE
    two_x = ExactPoly((0, 2))
    h_prev, h = ONE, two_x
    for k in range(1, n):
        h_prev, h = h, two_x * h - h_prev.scale(2 * k)
    return h


def _det_cofactor(m: list[list[ExactPoly]]) -> ExactPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    det = ExactPoly()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det_cofactor(minor)
        det = det + term if j % 2 == 0 else det - term
    return det


def _det_bareiss(m: list[list[ExactPoly]]) -> ExactPoly:
    """Fraction-free Gaussian elimination; exact in Z[x] by Bareiss' theorem."""
    n = len(m)
    a = [row[:] for row in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ExactPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = poly_divexact(num, prev)
            a[i][k] = ExactPoly()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det.scale(sign) if sign < 0 else det


def wronskian(fs: Sequence[ExactPoly]) -> ExactPoly:
    """Exact Wronskian determinant of a list of polynomials.

    Row i of the underlying matrix holds the i-th derivatives; columns keep
    the input order. Cofactor expansion is used up to 3x3, fraction-free
    (Bareiss) elimination beyond that, because cofactor cost grows
    factorially. A zero determinant returns the zero polynomial.
    """
    fs = list(fs)
    if not fs:
        raise ValueError("wronskian requires at least one polynomial")
    t = len(fs)
    rows = [fs]
    for _ in range(t - 1):
        rows.append([p.derivative() for p in rows[-1]])
    if t <= 3:
        return _det_cofactor(rows)
    return _det_bareiss(rows)
