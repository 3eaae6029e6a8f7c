"""Matroids of chart points and positive Richardson cells.

The ground set [2n] is ordered 1 < 2 < ... < n < 2n < 2n-1 < ... < n+1, which
is the bottom-to-top order of strands in the path diagrams.  A cell is named
by a pair (v, w) with w the minimal representative of its right coset and
v <= w.  The text form of a label is ``window(v^-1);window(w^-1)``: the
first half is the sequence of lowering replacements and the second half is
the sorted Gale-maximal basis, so a label reads exactly like the matroid data
it is computed from.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

from .exact import det
from .lgv import position_of
from .so2n import ChartPoint, deodhar_point
from .weyl import (
    NotInWeylGroup,
    SignedPerm,
    bruhat_leq,
    format_window,
    from_window,
    identity,
    in_parabolic,
    is_min_coset_rep,
    length,
    min_coset_reps,
    parse_window,
)

MATROID_MAX_N = 7
CENSUS_MAX_N = 6


class GuardExceeded(ValueError):
    pass


class NotRecognized(ValueError):
    """The matroid data does not describe a point of the nonnegative locus."""


class InvalidLabel(ValueError):
    pass


def prec_key(n: int, x: int) -> int:
    return position_of(n, x)


def prec_sorted(n: int, subset) -> tuple[int, ...]:
    return tuple(sorted(subset, key=lambda x: prec_key(n, x)))


@dataclass(frozen=True)
class BasisSet:
    n: int
    bases: frozenset[frozenset[int]]

    def __contains__(self, subset) -> bool:
        return frozenset(subset) in self.bases


def matroid_of(point: ChartPoint, allow_large: bool = False) -> BasisSet:
    n = point.n
    if n > MATROID_MAX_N and not allow_large:
        raise GuardExceeded(f"matroid enumeration refused for n={n} > {MATROID_MAX_N}")
    X = point.X
    bases = set()
    for cols in combinations(range(2 * n), n):
        if det(X.submatrix(range(n), cols)) != 0:
            bases.add(frozenset(c + 1 for c in cols))
    if not bases:
        raise ValueError("matrix does not have full rank")
    return BasisSet(n, frozenset(bases))


def gale_leq(n: int, a, b) -> bool:
    ka = sorted(prec_key(n, x) for x in a)
    kb = sorted(prec_key(n, x) for x in b)
    return all(x <= y for x, y in zip(ka, kb))


def gale_max(b: BasisSet) -> tuple[int, ...]:
    """The Gale-maximal basis, listed in increasing order for the ground order."""
    n = b.n
    best = max(b.bases, key=lambda s: sorted((prec_key(n, x) for x in s), reverse=True))
    if not all(gale_leq(n, other, best) for other in b.bases):
        raise NotRecognized("basis set has no unique Gale-maximal element")
    return prec_sorted(n, best)


def lowerings(b: BasisSet, start: Sequence[int]) -> tuple[list[tuple[int, ...]], list[int]]:
    """Bases I^(0), ..., I^(n) and the replacement elements t_1, ..., t_n."""
    n = b.n
    current = frozenset(start)
    if current not in b.bases:
        raise ValueError(f"{sorted(current)} is not a basis")
    ground = sorted(range(1, 2 * n + 1), key=lambda x: prec_key(n, x))
    chain = [prec_sorted(n, current)]
    replaced = []
    for j in range(n):
        removed = prec_sorted(n, current)[j]
        rest = current - {removed}
        new = next(x for x in ground if x not in rest and rest | {x} in b.bases)
        current = rest | {new}
        replaced.append(new)
        chain.append(prec_sorted(n, current))
    return chain, replaced


@dataclass(frozen=True)
class CellLabel:
    v: SignedPerm
    w: SignedPerm

    def __post_init__(self):
        if self.v.n != self.w.n:
            raise InvalidLabel("rank mismatch")
        if not is_min_coset_rep(self.w):
            raise InvalidLabel(f"{format_window(self.w)} is not a minimal coset representative")
        if not bruhat_leq(self.v, self.w):
            raise InvalidLabel(f"{format_window(self.v)} is not below {format_window(self.w)}")

    @property
    def n(self) -> int:
        return self.w.n

    @property
    def dimension(self) -> int:
        return length(self.w) - length(self.v)

    def in_chart(self) -> bool:
        return in_parabolic(self.v)

    def __str__(self):
        return f"{format_window(self.v.inverse())};{format_window(self.w.inverse())}"


def parse_label(text: str) -> CellLabel:
    left, sep, right = text.partition(";")
    if not sep:
        raise InvalidLabel(f"expected 'v;w', got {text!r}")
    try:
        vinv = parse_window(left)
        winv = parse_window(right, vinv.n)
    except (NotInWeylGroup, ValueError) as exc:
        raise InvalidLabel(str(exc)) from exc
    return CellLabel(vinv.inverse(), winv.inverse())


def identify_cell(point: ChartPoint) -> CellLabel:
    b = matroid_of(point)
    top = gale_max(b)
    _, replaced = lowerings(b, top)
    try:
        w = from_window(top).inverse()
        v = from_window(replaced).inverse()
    except NotInWeylGroup as exc:
        raise NotRecognized(f"input not recognized as a nonnegative point: {exc}") from exc
    try:
        return CellLabel(v, w)
    except InvalidLabel as exc:
        raise NotRecognized(f"input not recognized as a nonnegative point: {exc}") from exc


def sample_cell(label: CellLabel, t: Sequence) -> ChartPoint:
    return deodhar_point(label.v, label.w, t)


def top_label(n: int) -> CellLabel:
    return CellLabel(identity(n), max(min_coset_reps(n), key=length))


def cells_in_chart(n: int, allow_large: bool = False) -> list[CellLabel]:
    if n > CENSUS_MAX_N and not allow_large:
        raise GuardExceeded(f"cell census refused for n={n} > {CENSUS_MAX_N}")
    reps = sorted(min_coset_reps(n), key=lambda w: (length(w), w.image))
    labels = []
    for w in reps:
        for perm in permutations(range(1, n + 1)):
            v = from_window(perm)
            if bruhat_leq(v, w):
                labels.append(CellLabel(v, w))
    return labels
