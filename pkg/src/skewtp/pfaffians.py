"""Principal sub-Pfaffians, their forced sign pattern, and spinor coordinates."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .exact import Matrix, pfaffian, principal_pfaffians


def pf_sub(A: Matrix, I: Iterable[int]) -> Fraction:
    """Pfaffian of the principal submatrix on the 1-based index set I."""
    idx = sorted(set(I))
    if not idx:
        return Fraction(1)
    if len(idx) % 2:
        return Fraction(0)
    return pfaffian(A.submatrix([i - 1 for i in idx], [i - 1 for i in idx]))


def subset_sign(I: Iterable[int], n: int) -> int:
    idx = sorted(set(I))
    if len(idx) % 2:
        raise ValueError("subset must have even size")
    k = len(idx)
    exponent = sum(idx) - k * (k + 1) // 2
    return -1 if exponent % 2 else 1


def shuffle_sign(I: Iterable[int], n: int) -> int:
    """Sign of the permutation listing I increasingly, then its complement."""
    idx = sorted(set(I))
    word = idx + [x for x in range(1, n + 1) if x not in idx]
    inversions = sum(1 for a, b in combinations(word, 2) if a > b)
    return -1 if inversions % 2 else 1


def even_subsets(n: int):
    for size in range(0, n + 1, 2):
        yield from combinations(range(1, n + 1), size)


def pfaffian_vector(A: Matrix) -> dict[tuple[int, ...], Fraction]:
    return principal_pfaffians(A)


def check_sign_pattern(A: Matrix, strict: bool = True) -> tuple[bool, tuple[int, ...] | None]:
    """Test sgn(I) * Pf_I(A) > 0 (or >= 0 when not strict) for every even I.

    The witness is the first subset with the wrong sign; in the strict test a
    vanishing Pfaffian is reported only when no subset has the wrong sign.
    """
    n = A.rows
    pfs = principal_pfaffians(A)
    first_zero = None
    for I in even_subsets(n):
        value = subset_sign(I, n) * pfs[I]
        if value < 0:
            return False, I
        if value == 0 and first_zero is None:
            first_zero = I
    if strict and first_zero is not None:
        return False, first_zero
    return True, None


def spinor_coords(A: Matrix) -> dict[tuple[int, ...], Fraction]:
    """Coordinate at e_{[n] minus I}: sgn(I) * 2^{|I|/2} * Pf_I(A)."""
    n = A.rows
    pfs = principal_pfaffians(A)
    return {I: subset_sign(I, n) * 2 ** (len(I) // 2) * pfs[I] for I in even_subsets(n)}


def diagonal_conjugate(A: Matrix) -> Matrix:
    """-g A g^T with g = diag(1, -1, 1, ...).

    Conjugating by g multiplies Pf_I by (-1)^(sum of I), and the overall
    negation multiplies it by (-1)^(|I|/2); together they turn the forced
    sign pattern into plain positivity of every sub-Pfaffian.
    """
    n = A.rows
    g = [(-1) ** i for i in range(n)]
    return Matrix([[-g[i] * A[i, j] * g[j] for j in range(n)] for i in range(n)])
