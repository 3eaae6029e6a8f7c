"""Exact scalar and matrix arithmetic over the rationals and over Q[eps].

Scalars are :class:`fractions.Fraction` values, which are always stored in
lowest terms.  :class:`Poly` is a dense univariate polynomial with Fraction
coefficients.  :class:`Matrix` is an immutable grid whose entries all live in
one of the two rings.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


class NotSkewError(ValueError):
    pass


class ZeroPolynomialError(ArithmeticError):
    """Raised when a lowest-order term is requested from the zero polynomial."""


def rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"not a rational number: {value!r}") from None
        if sep and q <= 0:
            raise ValueError(f"denominator must be positive: {value!r}")
        return Fraction(p, q)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(x: Fraction) -> str:
    return str(x)


class Poly:
    """Dense polynomial in eps; ``coeffs[d]`` is the coefficient of eps**d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def eps(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if d == 0 else ("eps" if d == 1 else f"eps^{d}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts).replace("+ -", "- ")


def lowest_term(p: Poly) -> tuple[int, Fraction]:
    """Smallest degree with a nonzero coefficient, together with that coefficient."""
    for d, c in enumerate(p.coeffs):
        if c != 0:
            return d, c
    raise ZeroPolynomialError("polynomial is identically zero")


def _entry(value):
    if isinstance(value, Poly):
        return value
    return rational(value)


class Matrix:
    """Immutable rectangular matrix over Q or over Q[eps]."""

    __slots__ = ("rows", "cols", "entries", "is_poly")

    def __init__(self, entries: Iterable[Iterable]):
        grid = tuple(tuple(_entry(x) for x in row) for row in entries)
        if not grid:
            raise DimensionError("matrix needs at least one row")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DimensionError("ragged rows")
        kinds = {isinstance(x, Poly) for row in grid for x in row}
        if len(kinds) > 1:
            grid = tuple(tuple(x if isinstance(x, Poly) else Poly((x,)) for x in row) for row in grid)
        self.entries = grid
        self.rows = len(grid)
        self.cols = width
        self.is_poly = True in kinds

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "Matrix(" + repr([[str(x) for x in row] for row in self.entries]) + ")"

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = Poly() if (self.is_poly or other.is_poly) else Fraction(0)
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.entries])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.entries])

    def submatrix(self, rowset: Sequence[int], colset: Sequence[int]) -> "Matrix":
        """Rows and columns given as 0-based indices."""
        return Matrix([[self.entries[i][j] for j in colset] for i in rowset])

    def row_block(self, start: int, stop: int) -> "Matrix":
        return Matrix(self.entries[start:stop])

    def col_block(self, start: int, stop: int) -> "Matrix":
        return Matrix([row[start:stop] for row in self.entries])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionError("row count mismatch")
        return Matrix([a + b for a, b in zip(self.entries, other.entries)])

    def evaluate(self, x) -> "Matrix":
        """Substitute eps = x in every polynomial entry."""
        if not self.is_poly:
            return self
        return Matrix([[p(x) for p in row] for row in self.entries])

    def max_degree(self) -> int:
        if not self.is_poly:
            return 0
        return max((p.degree for row in self.entries for p in row), default=-1)

    def is_skew(self) -> bool:
        n = self.rows
        if n != self.cols:
            return False
        e = self.entries
        return all(e[i][j] == -e[j][i] for i in range(n) for j in range(i, n))

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)


def _bareiss(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [list(r) for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) / prev
            row_i[k] = Fraction(0)
        prev = pivot
    return sign * m[n - 1][n - 1]


def det(m: Matrix):
    """Exact determinant in the ring of ``m``."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.is_poly:
        return poly_det(m)
    return _bareiss([list(r) for r in m.entries])


def _check_index_set(idx: Sequence[int], bound: int, what: str) -> None:
    if any(not 0 <= i < bound for i in idx):
        raise IndexError(f"{what} index out of range: {list(idx)}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{what} indices must be strictly increasing: {list(idx)}")


def minor(m: Matrix, rowset: Sequence[int], colset: Sequence[int]):
    """Determinant of the submatrix on the given 1-based rows and columns."""
    if len(rowset) != len(colset):
        raise DimensionError("row and column sets differ in size")
    r0 = [i - 1 for i in rowset]
    c0 = [j - 1 for j in colset]
    _check_index_set(r0, m.rows, "row")
    _check_index_set(c0, m.cols, "column")
    return det(m.submatrix(r0, c0))


def _interpolate(xs: list[Fraction], ys: list[Fraction]) -> Poly:
    # Newton divided differences, then expand the nested form.
    coef = list(ys)
    k = len(xs)
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    result = Poly((coef[-1],))
    for i in range(k - 2, -1, -1):
        result = result * Poly((-xs[i], 1)) + coef[i]
    return result


def poly_det(m: Matrix) -> Poly:
    """Determinant over Q[eps] by evaluation at n*D + 1 points and interpolation."""
    if m.rows != m.cols:
        raise DimensionError("determinant of a non-square matrix")
    if not m.is_poly:
        return Poly((det(m),))
    n = m.rows
    bound = n * max(m.max_degree(), 0)
    xs = [Fraction(x) for x in range(bound + 1)]
    ys = [_bareiss([[p(x) for p in row] for row in m.entries]) for x in xs]
    return _interpolate(xs, ys)


def poly_minors(m: Matrix, colsets: Sequence[Sequence[int]]) -> list[Poly]:
    """Maximal minors of a wide polynomial matrix on several 1-based column sets.

    All minors share one set of evaluation points, so each point costs a single
    evaluation of the matrix.
    """
    n = m.rows
    bound = n * max(m.max_degree(), 0)
    xs = [Fraction(x) for x in range(bound + 1)]
    cols0 = [[c - 1 for c in cs] for cs in colsets]
    for cs in cols0:
        if len(cs) != n:
            raise DimensionError("column set size must equal the row count")
        _check_index_set(cs, m.cols, "column")
    values: list[list[Fraction]] = [[] for _ in cols0]
    for x in xs:
        ev = [[p(x) if isinstance(p, Poly) else p for p in row] for row in m.entries]
        for slot, cs in zip(values, cols0):
            slot.append(_bareiss([[row[c] for c in cs] for row in ev]))
    return [_interpolate(xs, ys) for ys in values]


def pfaffian(m: Matrix):
    """Pfaffian by expansion along the first row, memoized on index subsets."""
    if m.rows != m.cols:
        raise DimensionError("Pfaffian of a non-square matrix")
    if m.rows % 2:
        raise DimensionError("Pfaffian of an odd-dimensional matrix")
    if not m.is_skew():
        raise NotSkewError("matrix is not skew-symmetric")
    return _pfaffian_rec(m.entries, tuple(range(m.rows)))


def _pfaffian_rec(e, idx: tuple[int, ...]):
    @lru_cache(maxsize=None)
    def pf(sub: tuple[int, ...]):
        if not sub:
            return Fraction(1)
        first, rest = sub[0], sub[1:]
        total = Fraction(0)
        for pos, j in enumerate(rest):
            a = e[first][j]
            if a:
                term = a * pf(rest[:pos] + rest[pos + 1:])
                total = total - term if pos % 2 else total + term
        return total

    return pf(idx)


def principal_pfaffians(m: Matrix) -> dict[tuple[int, ...], Fraction]:
    """All principal sub-Pfaffians of a skew matrix, keyed by 1-based even subsets."""
    if not m.is_skew():
        raise NotSkewError("matrix is not skew-symmetric")
    n = m.rows
    e = m.entries
    table: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
    for size in range(2, n + 1, 2):
        for sub in combinations(range(n), size):
            first, rest = sub[0], sub[1:]
            total = Fraction(0)
            for pos, j in enumerate(rest):
                a = e[first][j]
                if a:
                    term = a * table[rest[:pos] + rest[pos + 1:]]
                    total = total - term if pos % 2 else total + term
            table[sub] = total
    return {tuple(i + 1 for i in k): v for k, v in table.items()}
