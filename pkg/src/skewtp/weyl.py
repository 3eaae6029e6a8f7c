"""The type D Weyl group as permutations of [2n].

An element is a bijection ``sigma`` of {1, ..., 2n} with
``sigma(n+i) = n + sigma(i)`` (mod 2n) and an even number of ``i <= n`` with
``sigma(i) > n``.  Products compose right to left: ``(a * b)(x) = a(b(x))``.
Values above n stand for negated coordinates, so ``sigma(i) = n + k`` means
``e_i -> -e_k``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence


class NotInWeylGroup(ValueError):
    pass


class BruhatError(ValueError):
    pass


@dataclass(frozen=True)
class SignedPerm:
    n: int
    image: tuple[int, ...]

    def __post_init__(self):
        n, img = self.n, self.image
        if len(img) != 2 * n or sorted(img) != list(range(1, 2 * n + 1)):
            raise NotInWeylGroup(f"not a permutation of [{2 * n}]: {img}")
        for i in range(1, n + 1):
            if img[n + i - 1] != _shift(img[i - 1], n):
                raise NotInWeylGroup(f"congruence fails at {i}: {img}")
        if sum(1 for v in img[:n] if v > n) % 2:
            raise NotInWeylGroup(f"odd number of sign changes: {img}")

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        return SignedPerm(self.n, tuple(self.image[y - 1] for y in other.image))

    def inverse(self) -> "SignedPerm":
        inv = [0] * (2 * self.n)
        for x, y in enumerate(self.image, start=1):
            inv[y - 1] = x
        return SignedPerm(self.n, tuple(inv))

    @property
    def window(self) -> tuple[int, ...]:
        return self.image[: self.n]

    def __str__(self):
        return format_window(self)

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, 2 * self.n + 1))


def _shift(v: int, n: int) -> int:
    return v + n if v <= n else v - n


def identity(n: int) -> SignedPerm:
    return SignedPerm(n, tuple(range(1, 2 * n + 1)))


def from_window(values: Sequence[int]) -> SignedPerm:
    n = len(values)
    vals = tuple(int(v) for v in values)
    return SignedPerm(n, vals + tuple(_shift(v, n) for v in vals))


def format_window(w: SignedPerm) -> str:
    sep = "," if 2 * w.n > 9 else ""
    return sep.join(str(v) for v in w.window)


def parse_window(text: str, n: int | None = None) -> SignedPerm:
    """Parse "2385", "2 3 8 5" or "2,3,8,5"; compact digits need n < 5."""
    text = text.strip()
    if any(c in text for c in ", "):
        values = [int(tok) for tok in text.replace(",", " ").split()]
    else:
        values = [int(c) for c in text]
    if n is not None and len(values) != n:
        raise NotInWeylGroup(f"expected {n} window entries, got {len(values)}")
    try:
        return from_window(values)
    except NotInWeylGroup:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise NotInWeylGroup(str(exc)) from exc


@lru_cache(maxsize=None)
def generator(n: int, i: int) -> SignedPerm:
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range for n={n}")
    img = list(range(1, 2 * n + 1))

    def swap(a, b):
        img[a - 1], img[b - 1] = img[b - 1], img[a - 1]

    if i < n:
        swap(i, i + 1)
        swap(n + i, n + i + 1)
    else:
        swap(n, 2 * n - 1)
        swap(n - 1, 2 * n)
    return SignedPerm(n, tuple(img))


def from_word(n: int, letters: Iterable[int]) -> SignedPerm:
    w = identity(n)
    for a in letters:
        w = w * generator(n, a)
    return w


def _signed(v: int, n: int) -> int:
    return v if v <= n else -(v - n)


def length(w: SignedPerm) -> int:
    """Number of positive roots sent to negative roots.

    Positive roots are e_a - e_b and e_a + e_b with a < b; a root
    +-e_a +- e_b is positive exactly when its smaller index has a plus sign.
    """
    n = w.n
    sw = [_signed(v, n) for v in w.window]
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            for sj in (-1, 1):
                # image of e_i + sj * e_j
                a, b = sw[i], sj * sw[j]
                small = a if abs(a) < abs(b) else b
                if small < 0:
                    count += 1
    return count


def right_descents(w: SignedPerm) -> list[int]:
    lw = length(w)
    return [i for i in range(1, w.n + 1) if length(w * generator(w.n, i)) < lw]


def reduced_word(w: SignedPerm) -> list[int]:
    letters: list[int] = []
    while not w.is_identity():
        i = right_descents(w)[0]
        letters.append(i)
        w = w * generator(w.n, i)
    return letters[::-1]


def bruhat_leq(u: SignedPerm, w: SignedPerm) -> bool:
    """Bruhat comparison by peeling right descents of w (lifting property)."""
    if u.n != w.n:
        raise ValueError("rank mismatch")
    n = u.n
    lu, lw = length(u), length(w)
    while True:
        if lu > lw:
            return False
        if lw == 0:
            return lu == 0
        if lu == 0:
            return True
        s = generator(n, right_descents(w)[0])
        w, lw = w * s, lw - 1
        us = u * s
        lus = length(us)
        if lus < lu:
            u, lu = us, lus


def all_elements(n: int) -> list[SignedPerm]:
    """Breadth-first enumeration from the identity, ordered by length."""
    start = identity(n)
    seen = {start}
    order = [start]
    queue = deque([start])
    gens = [generator(n, i) for i in range(1, n + 1)]
    while queue:
        w = queue.popleft()
        for s in gens:
            x = w * s
            if x not in seen:
                seen.add(x)
                order.append(x)
                queue.append(x)
    return order


def w0_coset_word(n: int) -> list[int]:
    """Fixed reduced word for the longest minimal coset representative."""
    if n < 2:
        raise ValueError("need n >= 2")
    letters: list[int] = []
    run = 0
    while len(letters) < comb(n, 2):
        if run % 2 == 0:
            letters.append(n)
        top = n - 2 if run % 2 == 0 else n - 1
        letters.extend(range(top, run, -1))
        run += 1
    return letters


def w0_word(n: int) -> list[int]:
    letters: list[int] = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return letters + w0_coset_word(n)


def longest_element(n: int) -> SignedPerm:
    return from_word(n, w0_word(n))


def subset_of(w: SignedPerm) -> frozenset[int]:
    return frozenset(i for i in range(1, w.n + 1) if w(i) > w.n)


def in_parabolic(v: SignedPerm) -> bool:
    """True when v lies in the subgroup generated by s_1, ..., s_{n-1}."""
    return all(v(i) <= v.n for i in range(1, v.n + 1))


@dataclass(frozen=True)
class Subexpression:
    base: tuple[int, ...]
    mask: tuple[bool, ...]

    def __post_init__(self):
        if len(self.base) != len(self.mask):
            raise ValueError("mask and word lengths differ")

    def selected(self) -> list[int]:
        return [a for a, keep in zip(self.base, self.mask) if keep]

    def product(self, n: int) -> SignedPerm:
        return from_word(n, self.selected())

    def suffix_products(self, n: int) -> list[SignedPerm]:
        """u_(0), ..., u_(p): products of the selected letters in the last k slots."""
        u = identity(n)
        out = [u]
        for a, keep in zip(reversed(self.base), reversed(self.mask)):
            if keep:
                u = generator(n, a) * u
            out.append(u)
        return out

    def __str__(self):
        return "".join(f"s{a}" if keep else "1" for a, keep in zip(self.base, self.mask))


def coset_word_from_subset(n: int, subset: Iterable[int]) -> Subexpression:
    """Reduced subexpression of the fixed coset word whose product has I_w = subset."""
    I = sorted(set(subset))
    if len(I) % 2:
        raise ValueError("subset must have even size")
    if any(not 1 <= i <= n for i in I):
        raise ValueError("subset must lie in [n]")
    base = w0_coset_word(n)
    mask = [False] * len(base)
    pos = 0
    run = 0
    picked_sn = 0
    while pos < len(base):
        if run % 2 == 0:
            if picked_sn < len(I) // 2:
                mask[pos] = True
                picked_sn += 1
            pos += 1
        top = n - 2 if run % 2 == 0 else n - 1
        letters = list(range(top, run, -1))
        if run < len(I):
            floor = I[run]
            for k, a in enumerate(letters):
                if a >= floor:
                    mask[pos + k] = True
        pos += len(letters)
        run += 1
    return Subexpression(tuple(base), tuple(mask))


def min_coset_rep(w: SignedPerm) -> SignedPerm:
    return coset_word_from_subset(w.n, subset_of(w)).product(w.n)


def is_min_coset_rep(w: SignedPerm) -> bool:
    return min_coset_rep(w) == w


def min_coset_reps(n: int) -> list[SignedPerm]:
    reps = []
    for size in range(0, n + 1, 2):
        for I in combinations(range(1, n + 1), size):
            reps.append(coset_word_from_subset(n, I).product(n))
    return reps


def is_distinguished(sub: Subexpression, n: int) -> bool:
    """Check u_(j) <= s * u_(j-1) for every suffix step, s the letter entering."""
    u = identity(n)
    for a, keep in zip(reversed(sub.base), reversed(sub.mask)):
        su = generator(n, a) * u
        if keep:
            u = su
        elif length(su) < length(u):
            return False
    return True


def is_reduced(sub: Subexpression, n: int) -> bool:
    return length(sub.product(n)) == sum(sub.mask)


def distinguished_subexpr(v: SignedPerm, base: Sequence[int]) -> Subexpression:
    """The unique reduced distinguished subexpression for v in a reduced word."""
    n = v.n
    base = tuple(base)
    target = length(v)
    p = len(base)
    mask = [False] * p

    def search(q: int, u: SignedPerm, lu: int) -> bool:
        # q is the 0-based position about to be decided, scanning right to left
        if lu == target:
            if u != v:
                return False
            # every remaining letter stays unselected, which must not shorten u
            return all(length(generator(n, base[r]) * u) > lu for r in range(q + 1))
        if q < 0 or q + 1 < target - lu:
            return False
        su = generator(n, base[q]) * u
        lsu = length(su)
        if lsu < lu:
            return False
        # keep the letter: su must still be a suffix of v in the weak order
        if length(v * su.inverse()) == target - lsu:
            mask[q] = True
            if search(q - 1, su, lsu):
                return True
            mask[q] = False
        return search(q - 1, u, lu)

    if not search(p - 1, identity(n), 0):
        raise BruhatError(f"{format_window(v)} is not below the product of {list(base)}")
    return Subexpression(base, tuple(mask))


def j_sets(sub: Subexpression, n: int) -> tuple[set[int], set[int], set[int]]:
    """Positions k (suffix indexing) where u_(k) goes up, stays, or goes down."""
    prods = sub.suffix_products(n)
    plus, circ, minus = set(), set(), set()
    for k in range(1, len(prods)):
        a, b = length(prods[k]), length(prods[k - 1])
        if prods[k] == prods[k - 1]:
            circ.add(k)
        elif a > b:
            plus.add(k)
        else:
            minus.add(k)
    return plus, circ, minus
