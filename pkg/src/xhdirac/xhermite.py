"""Wronskian-extended Hermite families.

A partition lambda = (l1 >= l2 >= ... >= lt >= 1) selects a family: the
gauge polynomial H_lambda is the Wronskian of H_{l_t}, ..., H_{l_1 + t - 1},
and the family member P_n appends one more Hermite column with index
n - |lambda| + t. For even partitions (equal consecutive pairs) H_lambda has
no real zeros, so exp(-r^2)/H_lambda^2 is a genuine weight and the family is
orthogonal under it even though some degrees are skipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .polycore import ExactPoly, X, hermite_classical, wronskian
from .numerics import (
    Grid,
    gauss_hermite_rule,
    poly_values,
    sturm_real_root_count,
)


class AdmissibilityError(ValueError):
    """Requested degree is not realized by a nonzero Wronskian of that degree."""


class NonEvenPartitionError(ValueError):
    """Weight-dependent operation on a family whose gauge polynomial may vanish."""


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive integers; empty means the classical family."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be >= 1, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def is_even(self) -> bool:
        """Equal consecutive pairs and even length (vacuously true when empty)."""
        if self.length % 2 != 0:
            return False
        return all(
            self.parts[2 * k] == self.parts[2 * k + 1] for k in range(self.length // 2)
        )

    def gauge_indices(self) -> list[int]:
        """Hermite indices (l_t, l_{t-1}+1, ..., l_1+t-1), strictly increasing."""
        t = self.length
        return [self.parts[t - 1 - j] + j for j in range(t)]

    def member_index(self, n: int) -> int:
        return n - self.size + self.length


def h_lambda(partition: Partition) -> ExactPoly:
    """Gauge polynomial of the family; degree |lambda| when nonzero."""
    if partition.length == 0:
        return ExactPoly((1,))
    return wronskian([hermite_classical(i) for i in partition.gauge_indices()])


class XHermiteFamily:
    """Immutable family holding the gauge polynomial and admissible members.

    Admissibility is decided constructively: n is admissible iff the
    appended-column Wronskian is a nonzero polynomial of degree exactly n.
    Everything is computed once at construction; concurrent reads are safe.
    """

    def __init__(self, partition: Partition, n_max: int = 16):
        if n_max < 0:
            raise ValueError("n_max must be non-negative")
        self.partition = partition
        self.n_max = n_max
        self.h = h_lambda(partition)
        self._members: dict[int, ExactPoly] = {}
        self._rejections: dict[int, str] = {}
        base = partition.gauge_indices()
        for n in range(n_max + 1):
            last = partition.member_index(n)
            if last < 0:
                self._rejections[n] = f"final Hermite index {last} is negative"
                continue
            if last in base:
                self._rejections[n] = (
                    f"final Hermite index {last} repeats a gauge column, determinant is zero"
                )
                continue
            p = wronskian([hermite_classical(i) for i in base + [last]])
            if p.is_zero():
                self._rejections[n] = "Wronskian determinant vanished"
            elif p.degree != n:
                self._rejections[n] = f"Wronskian degree {p.degree} != requested {n}"
            else:
                self._members[n] = p

    @cached_property
    def admissible(self) -> frozenset[int]:
        return frozenset(self._members)

    def exceptional_p(self, n: int) -> ExactPoly:
        if n in self._members:
            return self._members[n]
        if 0 <= n <= self.n_max:
            raise AdmissibilityError(
                f"n={n} is not admissible for partition {self.partition.parts}: "
                f"{self._rejections[n]}"
            )
        raise AdmissibilityError(
            f"n={n} outside the constructed range 0..{self.n_max}"
        )

    def require_even(self) -> None:
        if not self.partition.is_even():
            raise NonEvenPartitionError(
                f"partition {self.partition.parts} is not even; the gauge polynomial "
                "may vanish on the real line and the weight is not defined"
            )

    def weight(self, r):
        """Weight exp(-r^2)/H_lambda(r)^2; positive and finite for even partitions."""
        self.require_even()
        r = np.asarray(r, dtype=float)
        h = poly_values(self.h, r)
        out = np.exp(-(r**2)) / h**2
        if out.ndim == 0:
            return float(out)
        return out


def admissible_degrees(partition: Partition, n_max: int) -> frozenset[int]:
    """Degrees realized by nonzero Wronskians of the right degree, up to n_max."""
    return XHermiteFamily(partition, n_max=n_max).admissible


def exceptional_p(family: XHermiteFamily, n: int) -> ExactPoly:
    return family.exceptional_p(n)


def weight_w(family: XHermiteFamily, r):
    return family.weight(r)


def ode_residual_polynomial(
    family: XHermiteFamily, n: int, eigenvalue_term: int | None = None
) -> ExactPoly:
    """Denominator-cleared residual of the family's defining equation.

    H*P'' - 2(x H + H')*P' + (H'' + 2x H' + c*H)*P with c = 2(n - |lambda|)
    by default. The result must be the zero polynomial for admissible n;
    passing a wrong eigenvalue_term breaks the identity, which the negative
    tests rely on.
    """
    p = family.exceptional_p(n)
    h = family.h
    if eigenvalue_term is None:
        eigenvalue_term = 2 * (n - family.partition.size)
    hp = h.derivative()
    hpp = hp.derivative()
    pp = p.derivative()
    ppp = pp.derivative()
    term1 = h * ppp
    term2 = (X * h + hp).scale(2) * pp
    term3 = (hpp + (X * hp).scale(2) + h.scale(eigenvalue_term)) * p
    return term1 - term2 + term3


class QuadratureConvergenceError(RuntimeError):
    pass


def orthogonality_integral(
    family: XHermiteFamily,
    n: int,
    m: int,
    order: int | None = None,
    convergence_tol: float = 1e-12,
    check_convergence: bool = True,
) -> float:
    """Integral of P_n P_m W_lambda over the real line by Gauss-Hermite quadrature.

    The integrand after factoring exp(-r^2) is P_n P_m / H_lambda^2, a smooth
    rational function, so the rule converges geometrically. The order is
    doubled and the two results must agree to convergence_tol times the
    diagonal norm scale sqrt(I_nn I_mm); that check is part of the contract,
    since the rational factor rules out exact quadrature.
    """
    family.require_even()
    pn = family.exceptional_p(n)
    pm = family.exceptional_p(m)
    if order is None:
        # 1/H_lambda^2 has complex poles near the real axis, so the rule
        # converges sub-geometrically; ~320 nodes reach the 1e-12 contract
        order = max(2 * (n + m + family.partition.size) + 40, 320)

    def raw(p, q, rule) -> float:
        x = rule.nodes
        h2 = poly_values(family.h, x) ** 2
        return float(np.dot(rule.weights, poly_values(p, x) * poly_values(q, x) / h2))

    rule1 = gauss_hermite_rule(order)
    rule2 = gauss_hermite_rule(min(2 * order, 1024))
    val1 = raw(pn, pm, rule1)
    val2 = raw(pn, pm, rule2)
    scale = math.sqrt(raw(pn, pn, rule2) * raw(pm, pm, rule2))
    if check_convergence and abs(val2 - val1) > convergence_tol * scale:
        raise QuadratureConvergenceError(
            f"doubling the order moved the integral by {abs(val2 - val1):.3e} "
            f"(allowed {convergence_tol * scale:.3e})"
        )
    return val2


def weighted_product_residual(
    family: XHermiteFamily,
    n: int,
    m: int,
    grid: Grid,
    weight_inside: bool = True,
) -> float:
    """Max grid residual of the product-derivative identity for P_n, P_m.

    With the weight inside the derivative the identity
    d/dr [ W (P_n P_m' - P_n' P_m) / (2(n-m)) ] = P_n P_m W holds; the
    derivative here is expanded by the product rule on closed forms without
    using the defining equation, so a wrong equation coefficient shows up as
    a nonzero residual. weight_inside=False evaluates the variant with the
    bare polynomial bracket differentiated, which fails by an O(1) amount
    and serves as the negative control.
    """
    if n == m:
        raise ValueError("indices must differ")
    family.require_even()
    pn, pm = family.exceptional_p(n), family.exceptional_p(m)
    x = grid.points
    h = poly_values(family.h, x)
    hp = poly_values(family.h.derivative(), x)
    w = np.exp(-(x**2)) / h**2
    vn, vm = poly_values(pn, x), poly_values(pm, x)
    dvn, dvm = poly_values(pn.derivative(), x), poly_values(pm.derivative(), x)
    d2vn = poly_values(pn.derivative().derivative(), x)
    d2vm = poly_values(pm.derivative().derivative(), x)
    bracket = (vn * dvm - dvn * vm) / (2 * (n - m))
    dbracket = (vn * d2vm - d2vn * vm) / (2 * (n - m))
    if weight_inside:
        dw = (-2 * x - 2 * hp / h) * w
        lhs = dw * bracket + w * dbracket
    else:
        lhs = dbracket
    return float(np.max(np.abs(lhs - vn * vm * w)))


def zero_free_check(p: ExactPoly) -> bool:
    """True iff p has no real roots; exact Sturm count, no floating point."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    return sturm_real_root_count(p) == 0
