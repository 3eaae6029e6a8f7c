"""Signed minors M_{j,k}, the positivity test, parameter recovery and the
perturbative nonnegativity test."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .exact import Matrix, ZeroPolynomialError, lowest_term, minor, poly_minors, rational
from .lgv import build_top, enumerate_collections, prop_sink_set
from .so2n import chart, marsh_rietsch, point_from_skew, z_family


class NotSkew(ValueError):
    pass


class OutsideRecoverableLocus(ValueError):
    pass


def skew_matrix(entries) -> Matrix:
    """Build a rational matrix and insist that it is skew-symmetric."""
    m = Matrix(entries)
    if m.is_poly:
        raise NotSkew("entries must be rational")
    if m.rows != m.cols or not m.is_skew():
        raise NotSkew("matrix is not skew-symmetric")
    return m


def index_pairs(n: int) -> list[tuple[int, int]]:
    """All (j, k) with 1 <= j <= k <= n-1, in reverse lexicographic order."""
    return [(j, k) for k in range(1, n) for j in range(1, k + 1)]


def param_index(n: int, j: int, k: int) -> int:
    return comb(n, 2) - (comb(k, 2) + j - 1)


def _check_jk(n: int, j: int, k: int) -> None:
    if not 1 <= j <= k <= n - 1:
        raise IndexError(f"need 1 <= j <= k <= n-1, got (j, k) = ({j}, {k}) with n = {n}")


def m_rows_cols(n: int, j: int, k: int) -> tuple[list[int], list[int]]:
    rows = list(range(1, n - k)) + list(range(n - k + j, n + 1))
    cols = list(range(1, n - j + 1))
    return rows, cols


def m_minor(A: Matrix, j: int, k: int) -> Fraction:
    n = A.rows
    _check_jk(n, j, k)
    rows, cols = m_rows_cols(n, j, k)
    value = minor(A, rows, cols)
    return -value if (j * k) % 2 else value


def minor_table(A: Matrix) -> dict[tuple[int, int], Fraction]:
    return {jk: m_minor(A, *jk) for jk in index_pairs(A.rows)}


def is_totally_positive(A: Matrix) -> tuple[bool, dict[tuple[int, int], Fraction]]:
    table = minor_table(A)
    return all(v > 0 for v in table.values()), table


@lru_cache(maxsize=None)
def exponent_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Row (j, k) holds the exponent of each t_i in the monomial M_{j,k}(A(t))."""
    d = build_top(n)
    rows = []
    for j, k in index_pairs(n):
        (coll,) = enumerate_collections(d, prop_sink_set(n, j, k))
        exps = [0] * d.num_params
        for p in coll.paths:
            for a in p.arrows:
                exps[a.param - 1] += 1
        rows.append(tuple(exps))
    return tuple(rows)


@lru_cache(maxsize=None)
def inverse_exponents(n: int) -> tuple[tuple[int, ...], ...]:
    """Integer matrix F with t_i = prod over (j, k) of M_{j,k} ** F[i][(j, k)]."""
    E = [[Fraction(x) for x in row] for row in exponent_matrix(n)]
    size = len(E)
    # log M = E log t, so log t = E^{-1} log M
    aug = [row + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(E)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [row[size:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ArithmeticError("exponent matrix is not unimodular")
    return tuple(tuple(int(x) for x in row) for row in inv)


def params_from_table(n: int, table: dict[tuple[int, int], Fraction]) -> list[Fraction]:
    pairs = index_pairs(n)
    values = [rational(table[jk]) for jk in pairs]
    zero = [jk for jk, v in zip(pairs, values) if v == 0]
    if zero:
        raise OutsideRecoverableLocus(f"M_{{j,k}} vanishes at {zero}")
    ts = []
    for row in inverse_exponents(n):
        t = Fraction(1)
        for v, e in zip(values, row):
            t *= v ** e
        ts.append(t)
    return ts


def recover_params(A: Matrix) -> list[Fraction]:
    return params_from_table(A.rows, minor_table(A))


def reconstruct(n: int, table: dict[tuple[int, int], Fraction]) -> Matrix:
    return chart(marsh_rietsch(n, params_from_table(n, table)))


POSITIVE = "positive"
BOUNDARY = "nonnegative-boundary"
NOT_NONNEGATIVE = "not-nonnegative"


@dataclass
class NonnegReport:
    verdict: str
    leading: dict[tuple[int, int], tuple[int, Fraction] | None]
    witness: tuple[int, int] | None = None
    numerators: dict = field(default_factory=dict, repr=False)

    @property
    def nonnegative(self) -> bool:
        return self.verdict != NOT_NONNEGATIVE


def perturbed_point(A: Matrix) -> Matrix:
    """X(eps) = [Id | A] Z(eps) as an n x 2n polynomial matrix."""
    return point_from_skew(A).X @ z_family(A.rows)


def is_totally_nonnegative(A: Matrix) -> NonnegReport:
    n = A.rows
    if n < 2:
        return NonnegReport(POSITIVE, {}, None)
    X = perturbed_point(A)
    pairs = index_pairs(n)
    colsets = [list(range(1, n + 1))] + [list(prop_sink_set(n, j, k)) for j, k in pairs]
    polys = poly_minors(X, colsets)
    denominator, numerators = polys[0], polys[1:]
    if denominator.coefficient(0) != 1:
        raise ArithmeticError("left block minor of X(eps) does not start at 1")
    sign = -1 if (n - 1) % 2 else 1
    leading: dict[tuple[int, int], tuple[int, Fraction] | None] = {}
    numer = {}
    witness = None
    for (j, k), p in zip(pairs, numerators):
        p = p * (sign ** j)
        numer[(j, k)] = p
        try:
            leading[(j, k)] = lowest_term(p)
        except ZeroPolynomialError:
            leading[(j, k)] = None
        lt = leading[(j, k)]
        if witness is None and (lt is None or lt[1] < 0):
            witness = (j, k)
    if witness is not None:
        verdict = NOT_NONNEGATIVE
    elif all(lt[0] == 0 for lt in leading.values()):
        verdict = POSITIVE
    else:
        verdict = BOUNDARY
    return NonnegReport(verdict, leading, witness, numer)


def monomial_value(n: int, j: int, k: int, t: Sequence) -> Fraction:
    """Evaluate the monomial M_{j,k}(A(t)) from its exponent row."""
    row = exponent_matrix(n)[index_pairs(n).index((j, k))]
    value = Fraction(1)
    for ti, e in zip(t, row):
        value *= rational(ti) ** e
    return value
