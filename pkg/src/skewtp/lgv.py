"""Lindstrom-Gessel-Viennot diagrams for positive Richardson cells.

Strand positions run 1..2n from bottom to top.  The strand at position p
carries column label p when p <= n and 3n + 1 - p otherwise, so reading the
positions upward gives the labels 1, ..., n, 2n, ..., n + 1.  Word letter k
occupies slot k, which lies between layer boundaries k - 1 and k.  A path
that sits on a marked (boundary, position) vertex picks up a factor -1.

Collections are vertex-disjoint families in this layered graph; with that
notion the LGV lemma reproduces every maximal minor of the cell's matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .exact import rational
from .weyl import SignedPerm, w0_coset_word
from .so2n import deodhar_mask, sdot

MAX_ENUMERATION_N = 8


class EnumerationTooLarge(RuntimeError):
    pass


def label_at(n: int, pos: int) -> int:
    return pos if pos <= n else 3 * n + 1 - pos


def position_of(n: int, label: int) -> int:
    return label if label <= n else 3 * n + 1 - label


@dataclass(frozen=True)
class Arrow:
    slot: int
    tail: int
    head: int
    param: int
    sign: int


@dataclass(frozen=True)
class Diagram:
    n: int
    num_params: int
    letters: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    marks: frozenset[tuple[int, int]]
    sources: tuple[int, ...]

    @property
    def slots(self) -> int:
        return len(self.letters)

    def arrows_in_slot(self, k: int) -> tuple[Arrow, ...]:
        return self._by_slot()[k]

    def _by_slot(self):
        return _slot_index(self)


@lru_cache(maxsize=64)
def _slot_index(d: Diagram) -> dict[int, tuple[Arrow, ...]]:
    table: dict[int, list[Arrow]] = {k: [] for k in range(1, d.slots + 1)}
    for a in d.arrows:
        table[a.slot].append(a)
    return {k: tuple(v) for k, v in table.items()}


def _letter_arrows(n: int, i: int) -> list[tuple[int, int, int]]:
    """(tail position, head position, sign) for the two arrows of letter i."""
    if i < n:
        upper = (position_of(n, n + i + 1), position_of(n, n + i), -1)
        return [(i, i + 1, 1), upper]
    return [(position_of(n, n - 1), position_of(n, 2 * n), 1),
            (position_of(n, n), position_of(n, 2 * n - 1), -1)]


def _build(n: int, wmask: Sequence[bool], vmask: Sequence[bool]) -> Diagram:
    word = w0_coset_word(n)
    arrows: list[Arrow] = []
    marks: set[tuple[int, int]] = set()
    sources = [position_of(n, r) for r in range(1, 2 * n + 1)]
    param = 0
    for k, (letter, in_w, in_v) in enumerate(zip(word, wmask, vmask), start=1):
        if not in_w:
            continue
        if not in_v:
            param += 1
            for tail, head, sign in _letter_arrows(n, letter):
                arrows.append(Arrow(k, tail, head, param, sign))
            continue
        # Append the transposed lift S: the strand on column a continues on
        # column c with sign S[a][c]; push that relabeling through the left piece.
        S = sdot(n, letter).T
        tau = {}
        negated = []
        for a in range(1, 2 * n + 1):
            for c in range(1, 2 * n + 1):
                entry = S[a - 1, c - 1]
                if entry:
                    tau[position_of(n, a)] = position_of(n, c)
                    if entry < 0:
                        negated.append(c)
        arrows = [Arrow(x.slot, tau[x.tail], tau[x.head], x.param, x.sign) for x in arrows]
        marks = {(b, tau[p]) for b, p in marks}
        sources = [tau[p] for p in sources]
        for c in negated:
            marks.add((k, position_of(n, c)))
    return Diagram(n, param, tuple(word), tuple(arrows), frozenset(marks), tuple(sources))


def build_top(n: int) -> Diagram:
    N = len(w0_coset_word(n))
    return _build(n, [True] * N, [False] * N)


def build_boundary(v: SignedPerm, w: SignedPerm) -> Diagram:
    _, wmask, vmask = deodhar_mask(v, w)
    return _build(w.n, wmask, vmask)


@dataclass(frozen=True)
class Path:
    row: int
    source: int
    sink: int
    arrows: tuple[Arrow, ...]
    marks: int


@dataclass(frozen=True)
class PathCollection:
    paths: tuple[Path, ...]

    @property
    def sinks(self) -> frozenset[int]:
        return frozenset(p.sink for p in self.paths)


def _replay(d: Diagram, start: int, used: dict[int, Arrow]) -> tuple[int, int]:
    """Follow a path using the given slot->arrow choices; return (end position, marks)."""
    pos = start
    marks = int((0, pos) in d.marks)
    for k in range(1, d.slots + 1):
        a = used.get(k)
        if a is not None:
            pos = a.head
        if (k, pos) in d.marks:
            marks += 1
    return pos, marks


def _reachability(d: Diagram) -> list[dict[int, frozenset[int]]]:
    """reach[b][p]: final positions reachable from position p at boundary b."""
    size = 2 * d.n
    reach: list[dict[int, frozenset[int]]] = [dict() for _ in range(d.slots + 1)]
    reach[d.slots] = {p: frozenset((p,)) for p in range(1, size + 1)}
    for b in range(d.slots - 1, -1, -1):
        nxt = reach[b + 1]
        layer = {p: nxt[p] for p in range(1, size + 1)}
        for a in d.arrows_in_slot(b + 1):
            layer[a.tail] = layer[a.tail] | nxt[a.head]
        reach[b] = layer
    return reach


def _guard(d: Diagram, allow_large: bool) -> None:
    if d.n > MAX_ENUMERATION_N and not allow_large:
        raise EnumerationTooLarge(f"path enumeration refused for n={d.n} > {MAX_ENUMERATION_N}")


def enumerate_collections(d: Diagram, sinks: Sequence[int], allow_large: bool = False) -> list[PathCollection]:
    """All vertex-disjoint collections from rows 1..n to the given sink labels."""
    _guard(d, allow_large)
    n = d.n
    sinks = sorted(set(sinks))
    if len(sinks) != n:
        raise ValueError(f"need exactly {n} distinct sinks")
    target = frozenset(position_of(n, c) for c in sinks)
    reach = _reachability(d)
    start = tuple(d.sources[:n])
    memo: dict[tuple[int, tuple[int, ...]], list[tuple[tuple[int, Arrow], ...]]] = {}

    def go(b: int, state: tuple[int, ...]):
        if b == d.slots:
            return [()] if frozenset(state) == target else []
        key = (b, state)
        if key in memo:
            return memo[key]
        out = []
        if all(reach[b][p] & target for p in state):
            arrows = d.arrows_in_slot(b + 1)
            movers = [(r, a) for r, p in enumerate(state) for a in arrows if a.tail == p]
            for choice in range(1 << len(movers)):
                new = list(state)
                used = []
                for bit, (r, a) in enumerate(movers):
                    if choice >> bit & 1:
                        new[r] = a.head
                        used.append((r, a))
                if len(set(new)) < n:
                    continue
                for rest in go(b + 1, tuple(new)):
                    out.append(tuple(used) + rest)
        memo[key] = out
        return out

    collections = []
    for choice in go(0, start):
        paths = []
        for r in range(n):
            mine = {a.slot: a for rr, a in choice if rr == r}
            end, marks = _replay(d, start[r], mine)
            paths.append(Path(r + 1, start[r], label_at(n, end),
                              tuple(mine[k] for k in sorted(mine)), marks))
        collections.append(PathCollection(tuple(paths)))
    return collections


def _perm_sign(seq: Sequence[int]) -> int:
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def collection_sign(c: PathCollection) -> int:
    """Sign of row r -> rank of its sink among the sinks in numeric order."""
    return _perm_sign([p.sink for p in sorted(c.paths, key=lambda p: p.row)])


def path_weight(p: Path, t: Sequence[Fraction]) -> Fraction:
    w = Fraction(-1 if p.marks % 2 else 1)
    for a in p.arrows:
        w *= a.sign * t[a.param - 1]
    return w


def collection_weight(c: PathCollection, t: Sequence[Fraction]) -> Fraction:
    w = Fraction(collection_sign(c))
    for p in c.paths:
        w *= path_weight(p, t)
    return w


def lgv_minor(d: Diagram, sinks: Sequence[int], t: Sequence, allow_large: bool = False) -> Fraction:
    if len(t) != d.num_params:
        raise ValueError(f"expected {d.num_params} parameters, got {len(t)}")
    tt = [rational(x) for x in t]
    return sum((collection_weight(c, tt) for c in enumerate_collections(d, sinks, allow_large)), Fraction(0))


def all_sink_sets(n: int):
    return combinations(range(1, 2 * n + 1), n)


def left_greedy(d: Diagram) -> PathCollection:
    """Each path from rows 1..n takes every arrow whose tail it meets."""
    paths = []
    for r in range(d.n):
        pos = d.sources[r]
        used = {}
        for k in range(1, d.slots + 1):
            for a in d.arrows_in_slot(k):
                if a.tail == pos:
                    used[k] = a
                    pos = a.head
                    break
        end, marks = _replay(d, d.sources[r], used)
        paths.append(Path(r + 1, d.sources[r], label_at(d.n, end),
                          tuple(used[k] for k in sorted(used)), marks))
    return PathCollection(tuple(paths))


def single_path_sinks(d: Diagram, row: int) -> set[int]:
    """Every sink label reachable by one path from the given source row."""
    reach = _reachability(d)
    return {label_at(d.n, p) for p in reach[0][d.sources[row - 1]]}


def export_dot(d: Diagram) -> str:
    """Deterministic Graphviz text for a diagram."""
    n, N = d.n, d.slots
    lines = ["digraph lgv {", "  rankdir=LR;", "  node [shape=point];"]

    def node(p, b):
        return f"v{p}_{b}"

    def mark_attr(p, b):
        return ", mark=-1, color=red" if (b, p) in d.marks else ""

    for r in range(1, 2 * n + 1):
        lines.append(f'  src{r} [shape=plaintext, label="{r}"];')
        lines.append(f"  src{r} -> {node(d.sources[r - 1], 0)} [style=dotted];")
    for b in range(N + 1):
        members = " ".join(node(p, b) for p in range(1, 2 * n + 1))
        lines.append(f"  {{ rank=same; {members} }}")
    for p in range(1, 2 * n + 1):
        for b in range(1, N + 1):
            lines.append(f"  {node(p, b - 1)} -> {node(p, b)} [kind=strand{mark_attr(p, b - 1)}];")
        lab = label_at(n, p)
        lines.append(f'  sink{lab} [shape=plaintext, label="{lab}"];')
        lines.append(f"  {node(p, N)} -> sink{lab} [kind=strand{mark_attr(p, N)}];")
    for a in sorted(d.arrows, key=lambda a: (a.slot, a.tail)):
        sign = "" if a.sign > 0 else "-"
        lines.append(f'  {node(a.tail, a.slot - 1)} -> {node(a.head, a.slot)} '
                     f'[kind=arrow, label="{sign}t{a.param}", param={a.param}, sign={a.sign}'
                     f'{mark_attr(a.tail, a.slot - 1)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def prop_sink_set(n: int, j: int, k: int) -> tuple[int, ...]:
    """Sink labels whose minor matches M_{j,k}: {n-k..n-k+j-1} and {n+1..2n-j}."""
    return tuple(range(n - k, n - k + j)) + tuple(range(n + 1, 2 * n - j + 1))


__all__ = [
    "Arrow", "Diagram", "Path", "PathCollection", "build_top", "build_boundary",
    "enumerate_collections", "lgv_minor", "left_greedy", "export_dot", "label_at",
    "position_of", "prop_sink_set", "collection_weight", "collection_sign",
    "single_path_sinks", "all_sink_sets", "EnumerationTooLarge",
]
