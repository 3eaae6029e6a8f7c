"""Pinned SO(2n) for the split form with Gram matrix Q = [[0, I], [I, 0]].

Provides the one-parameter subgroups x_i(t), the lifts of simple reflections,
products along reduced words, the projection to OGr(n, 2n), the chart
[Id | A], and the polynomial family Z(eps) = z(eps)^T z(eps).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .exact import Matrix, Poly, det, rational
from .weyl import (
    SignedPerm,
    bruhat_leq,
    distinguished_subexpr,
    is_min_coset_rep,
    length,
    w0_coset_word,
    w0_word,
)


class NotInChart(ValueError):
    pass


class ParameterError(ValueError):
    pass


@lru_cache(maxsize=None)
def gram(n: int) -> Matrix:
    return Matrix([[int(abs(i - j) == n) for j in range(2 * n)] for i in range(2 * n)])


def _phi(n: int, i: int, a, b, c, d) -> Matrix:
    """Image of the 2x2 matrix [[a, b], [c, d]] under the i-th root embedding."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range for n={n}")
    one = Poly((1,)) if any(isinstance(x, Poly) for x in (a, b, c, d)) else Fraction(1)
    zero = one * 0
    m = [[one if r == s else zero for s in range(2 * n)] for r in range(2 * n)]

    def put(r, s, value):
        m[r - 1][s - 1] = value

    if i < n:
        block = {(i, i): a, (i, i + 1): b, (i + 1, i): c, (i + 1, i + 1): d,
                 (n + i, n + i): d, (n + i, n + i + 1): -c,
                 (n + i + 1, n + i): -b, (n + i + 1, n + i + 1): a}
    else:
        block = {(n - 1, n - 1): a, (n - 1, 2 * n): b, (n, n): a, (n, 2 * n - 1): -b,
                 (2 * n - 1, n): -c, (2 * n - 1, 2 * n - 1): d,
                 (2 * n, n - 1): c, (2 * n, 2 * n): d}
    for (r, s), value in block.items():
        put(r, s, value)
    return Matrix(m)


def x_gen(n: int, i: int, t) -> Matrix:
    t = t if isinstance(t, Poly) else rational(t)
    return _phi(n, i, 1, t, 0, 1)


@lru_cache(maxsize=None)
def sdot(n: int, i: int) -> Matrix:
    return _phi(n, i, 0, -1, 1, 0)


def is_group_element(g: Matrix) -> bool:
    n = g.rows // 2
    if g.rows != g.cols or g.rows != 2 * n:
        return False
    return g.T @ gram(n) @ g == gram(n) and det(g) == 1


@dataclass(frozen=True)
class ChartPoint:
    """An isotropic n-plane represented by the row span of an n x 2n matrix."""

    X: Matrix

    @property
    def n(self) -> int:
        return self.X.rows

    def is_isotropic(self) -> bool:
        n = self.n
        return (self.X @ gram(n) @ self.X.T).is_zero()

    def left_minor(self):
        return det(self.X.col_block(0, self.n))


def pi_n(g: Matrix) -> ChartPoint:
    n = g.rows // 2
    return ChartPoint(g.row_block(0, n))


def _inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse over Q with first-nonzero pivoting."""
    n = m.rows
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m.entries)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise NotInChart("left block is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return Matrix([row[n:] for row in aug])


def chart(point: ChartPoint) -> Matrix:
    """The skew matrix A with row span [Id | A] equal to the row span of X."""
    n = point.n
    if point.X.is_poly:
        raise TypeError("chart expects a rational point")
    left = point.X.col_block(0, n)
    if det(left) == 0:
        raise NotInChart("the left maximal minor vanishes")
    A = _inverse(left) @ point.X.col_block(n, 2 * n)
    if not A.is_skew():
        raise ArithmeticError("chart coordinate is not skew-symmetric; point is not isotropic")
    return A


def point_from_skew(A: Matrix) -> ChartPoint:
    return ChartPoint(Matrix.identity(A.rows).hstack(A))


def word_product(n: int, factors: Sequence[Matrix]) -> Matrix:
    g = Matrix.identity(2 * n)
    for f in factors:
        g = g @ f
    return g


def marsh_rietsch(n: int, t: Sequence) -> ChartPoint:
    word = w0_coset_word(n)
    if len(t) != len(word):
        raise ParameterError(f"expected {len(word)} parameters, got {len(t)}")
    return pi_n(word_product(n, [x_gen(n, i, ti) for i, ti in zip(word, t)]))


@lru_cache(maxsize=None)
def z_family(n: int) -> Matrix:
    """Z(eps) = z^T z with z the product of x_j(eps) along the reduced word of w_0."""
    eps = Poly.eps()
    z = word_product(n, [x_gen(n, i, eps) for i in w0_word(n)])
    return z.T @ z


def deodhar_mask(v: SignedPerm, w: SignedPerm) -> tuple[list[int], list[bool], list[bool]]:
    """Masks over the fixed coset word: letters of w, and letters of v inside w."""
    n = w.n
    base = w0_coset_word(n)
    wmask = list(distinguished_subexpr(w, base).mask)
    positions = [k for k, keep in enumerate(wmask) if keep]
    vsub = distinguished_subexpr(v, [base[k] for k in positions])
    vmask = [False] * len(base)
    for k, keep in zip(positions, vsub.mask):
        vmask[k] = keep
    return base, wmask, vmask


def deodhar_point(v: SignedPerm, w: SignedPerm, t: Sequence) -> ChartPoint:
    """Point of the positive Richardson cell for (v, w) with parameters t.

    Along the letters of w, those used by the distinguished word for v give
    the transposed lift of s_i; every other letter gives x_i(t_k), with
    parameters consumed left to right.
    """
    n = w.n
    if not is_min_coset_rep(w):
        raise ParameterError(f"{w} is not a minimal coset representative")
    if not bruhat_leq(v, w):
        raise ParameterError(f"{v} is not below {w} in Bruhat order")
    need = length(w) - length(v)
    if len(t) != need:
        raise ParameterError(f"expected {need} parameters, got {len(t)}")
    base, wmask, vmask = deodhar_mask(v, w)
    factors = []
    params = iter(t)
    for a, in_w, in_v in zip(base, wmask, vmask):
        if not in_w:
            continue
        factors.append(sdot(n, a).T if in_v else x_gen(n, a, next(params)))
    return pi_n(word_product(n, factors))


def num_params(n: int) -> int:
    return comb(n, 2)
