"""Independent numerical oracles.

Gauss-Hermite quadrature, a finite-difference Schrodinger eigensolver,
Sturm-sequence real-root counting, and uniform-grid calculus. These are the
cross-checks the analytic layers are validated against, so they share no
code path with the things they verify.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .polycore import ExactPoly


@dataclass(frozen=True)
class Grid:
    """Uniform abscissa grid: points are start + step*i for i in [0, count)."""

    start: float
    step: float
    count: int

    def __post_init__(self) -> None:
        if self.step <= 0:
            raise ValueError("grid step must be positive")
        if self.count < 2:
            raise ValueError("grid needs at least two points")

    @property
    def stop(self) -> float:
        return self.start + self.step * (self.count - 1)

    @property
    def points(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count)

    @classmethod
    def from_bounds(cls, lo: float, hi: float, count: int) -> "Grid":
        if hi <= lo:
            raise ValueError("grid upper bound must exceed lower bound")
        return cls(start=lo, step=(hi - lo) / (count - 1), count=count)


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for the weight exp(-x^2) on the whole real line."""

    nodes: np.ndarray
    weights: np.ndarray

    @property
    def order(self) -> int:
        return len(self.nodes)

    def integrate(self, f) -> float:
        """Integral of f(x) exp(-x^2) dx over R; f must accept an ndarray."""
        return float(np.dot(self.weights, f(self.nodes)))


@functools.lru_cache(maxsize=64)
def gauss_hermite_rule(order: int) -> QuadratureRule:
    """Gauss-Hermite rule via the symmetric-tridiagonal (Golub-Welsch) method.

    Nodes are the roots of the order-th Hermite polynomial; the rule
    integrates exp(-x^2) x^j exactly for j <= 2*order - 1. Nodes are
    symmetrized about 0 so the symmetry invariant holds to the bit.

    Orders up to 1024 are allowed: rational integrands with complex poles
    near the real axis (the extended-family weights) converge only
    sub-geometrically, and need a few hundred nodes for 1e-12 accuracy.
    Beyond order ~180 the extreme tail weights underflow double precision
    to exact zero, which is harmless for Gaussian-damped integrands.
    """
    if not 1 <= order <= 1024:
        raise ValueError(f"quadrature order must be in [1, 1024], got {order}")
    if order == 1:
        return QuadratureRule(np.array([0.0]), np.array([math.sqrt(math.pi)]))
    # Jacobi matrix for physicists' Hermite: off-diagonal sqrt(k/2)
    beta = np.sqrt(np.arange(1, order) / 2.0)
    x, vecs = eigh_tridiagonal(np.zeros(order), beta)
    w = math.sqrt(math.pi) * vecs[0, :] ** 2
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    if order % 2 == 1:
        x[order // 2] = 0.0
    return QuadratureRule(x, w)


def fd_schrodinger_spectrum(
    potential,
    half_width: float,
    points: int,
    count: int,
    richardson_check: bool = True,
    richardson_rtol: float = 1e-4,
) -> np.ndarray:
    """Lowest eigenvalues of -psi'' + V(z) psi = eps psi on [-L, L], Dirichlet.

    Standard 3-point Laplacian on a uniform grid; eigenvalues from a
    symmetric-tridiagonal bisection routine. When richardson_check is on,
    the grid is doubled and the reported eigenvalues must agree to
    richardson_rtol relative, otherwise a RuntimeError is raised.
    """
    if half_width <= 0:
        raise ValueError("half_width must be positive")
    if points < 200:
        raise ValueError("use at least 200 grid points")
    if count < 1:
        raise ValueError("count must be positive")

    def lowest(npts: int) -> np.ndarray:
        h = 2.0 * half_width / npts
        z = -half_width + h * np.arange(1, npts)
        try:
            v = np.asarray(potential(z), dtype=float)
            if v.shape != z.shape:
                raise TypeError
        except TypeError:
            v = np.array([float(potential(zi)) for zi in z])
        if not np.all(np.isfinite(v)):
            raise ValueError("potential is not finite on the requested interval")
        diag = 2.0 / h**2 + v
        off = np.full(npts - 2, -1.0 / h**2)
        return eigh_tridiagonal(
            diag, off, select="i", select_range=(0, count - 1), eigvals_only=True
        )

    vals = lowest(points)
    if richardson_check:
        fine = lowest(2 * points)
        denom = np.maximum(np.abs(fine), 1e-8)
        rel = np.max(np.abs(vals - fine) / denom)
        if rel >= richardson_rtol:
            raise RuntimeError(
                f"eigenvalues not converged: doubling the grid moved them by {rel:.3e} relative"
            )
    return vals


# ---------------------------------------------------------------------------
# Sturm-sequence real-root counting (exact rational arithmetic)
# ---------------------------------------------------------------------------

def _fdeg(a: list[Fraction]) -> int:
    return len(a) - 1


def _ftrim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fderiv(a: list[Fraction]) -> list[Fraction]:
    return _ftrim([k * a[k] for k in range(1, len(a))])


def _frem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    r = a[:]
    db, lb = _fdeg(b), b[-1]
    while r and _fdeg(r) >= db:
        k = _fdeg(r) - db
        q = r[-1] / lb
        for j in range(len(b)):
            r[k + j] -= q * b[j]
        r = _ftrim(r)  # leading term cancels exactly in Fraction arithmetic
    return r


def _fgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = a[:], b[:]
    while _ftrim(b):
        a, b = b, _frem(a, b)
    lead = a[-1]
    return [c / lead for c in a]


def _fdivexact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    q = [Fraction(0)] * (_fdeg(a) - _fdeg(b) + 1)
    r = a[:]
    while _ftrim(r) and _fdeg(r) >= _fdeg(b):
        k = _fdeg(r) - _fdeg(b)
        c = r[-1] / b[-1]
        q[k] = c
        for j in range(len(b)):
            r[k + j] -= c * b[j]
        r = _ftrim(r)
    return _ftrim(q)


def sturm_real_root_count(p: ExactPoly) -> int:
    """Number of distinct real roots of p, decided exactly.

    The square-free part p/gcd(p, p') is taken first, then the Sturm chain
    sign variations at -inf and +inf are differenced. All arithmetic is
    exact (Fractions), so the answer is a certificate, not an estimate.
    """
    if p.is_zero():
        raise ValueError("root counting is undefined for the zero polynomial")
    a = _ftrim([Fraction(c) for c in p.coeffs])
    if _fdeg(a) == 0:
        return 0
    g = _fgcd(a, _fderiv(a))
    if _fdeg(g) > 0:
        a = _fdivexact(a, g)
    if _fdeg(a) == 0:
        return 0
    chain = [a, _fderiv(a)]
    while _fdeg(chain[-1]) > 0:
        r = _frem(chain[-2], chain[-1])
        r = [-c for c in r]
        if not _ftrim(r):
            break
        chain.append(r)

    def variations(at_plus_inf: bool) -> int:
        signs = []
        for q in chain:
            s = 1 if q[-1] > 0 else -1
            if not at_plus_inf and _fdeg(q) % 2 == 1:
                s = -s
            signs.append(s)
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    return variations(False) - variations(True)


# ---------------------------------------------------------------------------
# Grid calculus
# ---------------------------------------------------------------------------

def central_derivative(values: np.ndarray, grid: Grid) -> np.ndarray:
    """First derivative on a uniform grid.

    4th-order central stencil in the interior, 2nd-order at the boundaries
    (3-point central one step in, one-sided at the ends). Needs >= 5 points.
    """
    v = np.asarray(values, dtype=float)
    if v.shape[0] != grid.count:
        raise ValueError("values do not match the grid")
    if grid.count < 5:
        raise ValueError("grid too small for a 4th-order stencil")
    h = grid.step
    out = np.empty_like(v)
    out[2:-2] = (v[:-4] - 8 * v[1:-3] + 8 * v[3:-1] - v[4:]) / (12 * h)
    out[1] = (v[2] - v[0]) / (2 * h)
    out[-2] = (v[-1] - v[-3]) / (2 * h)
    out[0] = (-3 * v[0] + 4 * v[1] - v[2]) / (2 * h)
    out[-1] = (3 * v[-1] - 4 * v[-2] + v[-3]) / (2 * h)
    return out


def central_second_derivative(values: np.ndarray, grid: Grid) -> np.ndarray:
    """Second derivative, 4th-order central stencil in the interior."""
    v = np.asarray(values, dtype=float)
    if v.shape[0] != grid.count:
        raise ValueError("values do not match the grid")
    if grid.count < 7:
        raise ValueError("grid too small for a 4th-order second-derivative stencil")
    h2 = grid.step**2
    out = np.empty_like(v)
    out[2:-2] = (-v[:-4] + 16 * v[1:-3] - 30 * v[2:-2] + 16 * v[3:-1] - v[4:]) / (12 * h2)
    out[1] = (v[0] - 2 * v[1] + v[2]) / h2
    out[-2] = (v[-3] - 2 * v[-2] + v[-1]) / h2
    out[0] = (2 * v[0] - 5 * v[1] + 4 * v[2] - v[3]) / h2
    out[-1] = (2 * v[-1] - 5 * v[-2] + 4 * v[-3] - v[-4]) / h2
    return out


def trapezoid_integral(values: np.ndarray, grid: Grid) -> float:
    v = np.asarray(values, dtype=float)
    if v.shape[0] != grid.count:
        raise ValueError("values do not match the grid")
    return float(grid.step * (v.sum() - 0.5 * (v[0] + v[-1])))


def masked_trapezoid_integral(values: np.ndarray, grid: Grid, keep: np.ndarray) -> float:
    """Composite trapezoid over the contiguous runs where keep is True."""
    v = np.asarray(values, dtype=float)
    keep = np.asarray(keep, dtype=bool)
    if v.shape[0] != grid.count or keep.shape[0] != grid.count:
        raise ValueError("values/mask do not match the grid")
    total = 0.0
    i = 0
    n = grid.count
    while i < n:
        if not keep[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and keep[j + 1]:
            j += 1
        if j > i:
            seg = v[i : j + 1]
            total += grid.step * (seg.sum() - 0.5 * (seg[0] + seg[-1]))
        i = j + 1
    return total


def trapezoid_integral_excluding(
    values: np.ndarray, grid: Grid, centers, radius: float
) -> float:
    """Trapezoid integral over the grid span minus windows around centers.

    Each window is the open interval (c - radius, c + radius). The kept
    segments end exactly at the window boundaries: the boundary value is
    linearly interpolated, so the result converges under grid refinement
    instead of inheriting an O(h) boundary-quantization error.
    """
    v = np.asarray(values, dtype=float)
    if v.shape[0] != grid.count:
        raise ValueError("values do not match the grid")
    lo, hi = grid.start, grid.stop
    windows = sorted((c - radius, c + radius) for c in centers)
    merged: list[list[float]] = []
    for a, b in windows:
        a, b = max(a, lo), min(b, hi)
        if b <= a:
            continue
        if merged and a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    segments = []
    cursor = lo
    for a, b in merged:
        if a > cursor:
            segments.append((cursor, a))
        cursor = max(cursor, b)
    if cursor < hi:
        segments.append((cursor, hi))

    x0, h = grid.start, grid.step

    def value_at(pos: float) -> float:
        t = (pos - x0) / h
        i = min(int(math.floor(t)), grid.count - 2)
        i = max(i, 0)
        frac = t - i
        return float(v[i] * (1 - frac) + v[i + 1] * frac)

    total = 0.0
    for a, b in segments:
        ia = int(math.ceil((a - x0) / h - 1e-12))
        ib = int(math.floor((b - x0) / h + 1e-12))
        ia = max(ia, 0)
        ib = min(ib, grid.count - 1)
        xa, xb = x0 + ia * h, x0 + ib * h
        if ia > ib:
            total += 0.5 * (value_at(a) + value_at(b)) * (b - a)
            continue
        if ib > ia:
            seg = v[ia : ib + 1]
            total += h * (seg.sum() - 0.5 * (seg[0] + seg[-1]))
        if a < xa:
            total += 0.5 * (value_at(a) + v[ia]) * (xa - a)
        if b > xb:
            total += 0.5 * (v[ib] + value_at(b)) * (b - xb)
    return total


def poly_values(p: ExactPoly, x: np.ndarray) -> np.ndarray:
    """Vectorized Horner evaluation of an exact polynomial."""
    x = np.asarray(x, dtype=float)
    acc = np.zeros_like(x)
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    return acc
