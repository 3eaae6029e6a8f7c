"""Frozen reference data used across the test suite.

Every literal here was produced independently of the package, either worked
out by hand or transcribed from standard worked cases of the n = 4 chart.
"""

from fractions import Fraction

# The n=4 skew matrices used throughout: A1 is not nonnegative, A2 is
# nonnegative with cell 2134;2385, A3 has Pfaffians of the right sign but is
# not nonnegative.
A1 = [[0, 0, 0, 2], [0, 0, 0, 0], [0, 0, 0, -2], [-2, 0, 2, 0]]
A2 = [[0, 0, 0, 2], [0, 0, 0, 0], [0, 0, 0, 2], [-2, 0, -2, 0]]
A3 = [[0, 0, 0, 2], [0, 0, 1, 0], [0, -1, 0, 2], [-2, 0, -2, 0]]

# Lowest-order terms (coefficient, degree) of the six numerators for A1 and
# A3, listed for (1,1), (1,2), (2,2), (1,3), (2,3), (3,3).
A1_LEADING_SEQUENCE = [(80, 5), (40, 4), (16, 2), (80, 5), (-16, 2), (2, 0)]
A3_LEADING_SEQUENCE = [(8, 1), (16, 1), (8, 1), (2, 0), (-2, 0), (2, 0)]

# Entry (i, j) of Z(eps) for n = 4 as a coefficient list, lowest degree first.
Z4_EXPECTED = [
    [
        [1],
        [0, 4],
        [0, 0, 10],
        [0, 0, 0, 7],
        [0, 0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 0, 5],
        [0, 0, 0, 0, -11],
        [0, 0, 0, 13],
    ],
    [
        [0, 4],
        [1, 0, 16],
        [0, 4, 0, 40],
        [0, 0, 4, 0, 28],
        [0, 0, 0, 0, 0, -1, 0, -4],
        [0, 0, 0, 0, 4, 0, 20],
        [0, 0, 0, -7, 0, -44],
        [0, 0, 6, 0, 52],
    ],
    [
        [0, 0, 10],
        [0, 4, 0, 40],
        [1, 0, 16, 0, 100],
        [0, 2, 0, 16, 0, 70],
        [0, 0, 0, 0, -1, 0, -4, 0, -10],
        [0, 0, 0, 3, 0, 16, 0, 50],
        [0, 0, -4, 0, -28, 0, -110],
        [0, 2, 0, 24, 0, 130],
    ],
    [
        [0, 0, 0, 7],
        [0, 0, 4, 0, 28],
        [0, 2, 0, 16, 0, 70],
        [1, 0, 4, 0, 16, 0, 49],
        [0, 0, 0, -1, 0, -2, 0, -4, 0, -7],
        [0, 0, 2, 0, 6, 0, 16, 0, 35],
        [0, -2, 0, -8, 0, -28, 0, -77],
        [0, 0, 4, 0, 24, 0, 91],
    ],
    [
        [0, 0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 0, -1, 0, -4],
        [0, 0, 0, 0, -1, 0, -4, 0, -10],
        [0, 0, 0, -1, 0, -2, 0, -4, 0, -7],
        [1, 0, 16, 0, 36, 0, 10, 0, 1, 0, 1, 0, 1],
        [0, -4, 0, -24, 0, -14, 0, -3, 0, -4, 0, -5],
        [0, 0, 6, 0, 8, 0, 4, 0, 7, 0, 11],
        [0, 0, 0, -3, 0, -2, 0, -6, 0, -13],
    ],
    [
        [0, 0, 0, 0, 0, 5],
        [0, 0, 0, 0, 4, 0, 20],
        [0, 0, 0, 3, 0, 16, 0, 50],
        [0, 0, 2, 0, 6, 0, 16, 0, 35],
        [0, -4, 0, -24, 0, -14, 0, -3, 0, -4, 0, -5],
        [1, 0, 16, 0, 20, 0, 9, 0, 16, 0, 25],
        [0, -4, 0, -12, 0, -12, 0, -28, 0, -55],
        [0, 0, 4, 0, 6, 0, 24, 0, 65],
    ],
    [
        [0, 0, 0, 0, -11],
        [0, 0, 0, -7, 0, -44],
        [0, 0, -4, 0, -28, 0, -110],
        [0, -2, 0, -8, 0, -28, 0, -77],
        [0, 0, 6, 0, 8, 0, 4, 0, 7, 0, 11],
        [0, -4, 0, -12, 0, -12, 0, -28, 0, -55],
        [1, 0, 8, 0, 16, 0, 49, 0, 121],
        [0, -2, 0, -8, 0, -42, 0, -143],
    ],
    [
        [0, 0, 0, 13],
        [0, 0, 6, 0, 52],
        [0, 2, 0, 24, 0, 130],
        [0, 0, 4, 0, 24, 0, 91],
        [0, 0, 0, -3, 0, -2, 0, -6, 0, -13],
        [0, 0, 4, 0, 6, 0, 24, 0, 65],
        [0, -2, 0, -8, 0, -42, 0, -143],
        [1, 0, 4, 0, 36, 0, 169],
    ],
]


def monomials_n4(t):
    """The six signed minors of A(t) for n = 4 as explicit monomials."""
    t1, t2, t3, t4, t5, t6 = (Fraction(x) for x in t)
    return {
        (1, 1): (t1 * t2 * t3 * t4 * t5) ** 2 * t6,
        (1, 2): (t1 * t2 * t3 * t4) ** 2 * t5 * t6,
        (2, 2): (t1 * t2 * t3) ** 2 * t4 * t5,
        (1, 3): t1**2 * t2**2 * t3 * t4**2 * t5 * t6,
        (2, 3): t1**2 * t2 * t3 * t4 * t5,
        (3, 3): t1 * t2 * t3,
    }


def chart_n4(t):
    """A(t) for n = 4 written out entry by entry."""
    t1, t2, t3, t4, t5, t6 = (Fraction(x) for x in t)
    upper = {
        (0, 1): t1 * t2 * t3 * t4 * t5,
        (0, 2): -t1 * t2 * t3 * t4,
        (0, 3): t1 * t2 * t3,
        (1, 2): t1 * t2 * t4,
        (1, 3): -t1 * t2 - t1 * t5,
        (2, 3): t1 + t6,
    }
    A = [[Fraction(0)] * 4 for _ in range(4)]
    for (i, j), v in upper.items():
        A[i][j], A[j][i] = v, -v
    return A


def minors_n4(a):
    """The six signed minors of a 4x4 skew matrix as explicit polynomials."""
    a12, a13, a14 = a[0][1], a[0][2], a[0][3]
    a23, a24, a34 = a[1][2], a[1][3], a[2][3]
    return {
        (1, 1): a12 * a14 * a23 - a12 * a13 * a24 + a12**2 * a34,
        (1, 2): a13**2 * a24 - a13 * a14 * a23 - a12 * a13 * a34,
        (2, 2): a12 * a14,
        (1, 3): a14 * a23**2 - a13 * a23 * a24 + a12 * a23 * a34,
        (2, 3): a13 * a24 - a14 * a23,
        (3, 3): a14,
    }
