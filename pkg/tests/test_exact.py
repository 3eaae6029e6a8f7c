import random
from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import pytest

from skewtp.exact import (
    DimensionError,
    Matrix,
    NotSkewError,
    Poly,
    ZeroPolynomialError,
    det,
    lowest_term,
    minor,
    pfaffian,
    poly_det,
    poly_minors,
    principal_pfaffians,
    rational,
)

from conftest import random_skew


def perm_sign(p):
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def leibniz(rows):
    n = len(rows)
    return sum(perm_sign(p) * prod(rows[i][p[i]] for i in range(n)) for p in permutations(range(n)))


def pfaffian_by_permutations(a):
    """Sum over all of S_2m, divided by 2^m m!."""
    size = len(a)
    m = size // 2
    total = Fraction(0)
    for p in permutations(range(size)):
        total += perm_sign(p) * prod(a[p[2 * i]][p[2 * i + 1]] for i in range(m))
    return total / (2**m * factorial(m))


def test_det_examples():
    assert det(Matrix.identity(5)) == 1
    assert det(Matrix([[1, 2], [3, 4]])) == -2
    assert det(Matrix([[1, 2, 3], [4, 5, 6], [1, 2, 3]])) == 0


def test_det_rejects_non_square():
    with pytest.raises(DimensionError):
        det(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_det_matches_leibniz(rng):
    for n in range(1, 6):
        for _ in range(5):
            rows = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)] for _ in range(n)]
            assert det(Matrix(rows)) == leibniz(rows)


def test_det_alternating(rng):
    rows = [[Fraction(rng.randint(-9, 9)) for _ in range(4)] for _ in range(4)]
    swapped = [rows[1], rows[0]] + rows[2:]
    assert det(Matrix(swapped)) == -det(Matrix(rows))


def test_minor_examples():
    assert minor(Matrix.identity(4), [1, 2], [1, 2]) == 1
    A = Matrix(random_skew(random.Random(1), 4))
    assert minor(A, [1], [4]) == A[0, 3]
    assert minor(Matrix([[1, 2], [3, 4]]), [1, 2], [1, 2]) == -2


def test_minor_errors():
    m = Matrix([[1, 2], [3, 4]])
    with pytest.raises(DimensionError):
        minor(m, [1, 2], [1])
    with pytest.raises(IndexError):
        minor(m, [1, 3], [1, 2])
    with pytest.raises(ValueError):
        minor(m, [1, 2], [2, 1])


def test_pfaffian_small_cases():
    assert pfaffian(Matrix([[0, 3], [-3, 0]])) == 3
    assert pfaffian(Matrix.zeros(4, 4)) == 0


def test_pfaffian_four_by_four_formula(rng):
    for _ in range(10):
        a = random_skew(rng, 4)
        expected = a[0][1] * a[2][3] - a[0][2] * a[1][3] + a[0][3] * a[1][2]
        assert pfaffian(Matrix(a)) == expected == pfaffian_by_permutations(a)


def test_pfaffian_matches_permutation_sum(rng):
    for size in (2, 4, 6):
        for _ in range(3):
            a = random_skew(rng, size)
            assert pfaffian(Matrix(a)) == pfaffian_by_permutations(a)


def test_pfaffian_errors():
    with pytest.raises(DimensionError):
        pfaffian(Matrix.zeros(3, 3))
    with pytest.raises(NotSkewError):
        pfaffian(Matrix([[0, 1], [1, 0]]))


def test_pfaffian_squared_is_det(rng):
    for i in range(200):
        size = 2 + 2 * (i % 4)
        m = Matrix(random_skew(rng, size))
        assert pfaffian(m) ** 2 == det(m)


def test_principal_pfaffians_agree_with_recursion(rng):
    m = Matrix(random_skew(rng, 6))
    table = principal_pfaffians(m)
    assert table[()] == 1
    for I, value in table.items():
        if I:
            idx = [i - 1 for i in I]
            assert value == pfaffian(m.submatrix(idx, idx))


def test_lowest_term():
    assert lowest_term(Poly([0, 0, 0, 0, 0, 80, 0, 3])) == (5, 80)
    assert lowest_term(Poly([2, -8])) == (0, 2)
    assert lowest_term(Poly([0, 0, -16, 5])) == (2, -16)
    with pytest.raises(ZeroPolynomialError):
        lowest_term(Poly())


def test_poly_det_examples():
    eps = Poly.eps()
    assert poly_det(Matrix([[eps, 0], [0, eps]])) == eps * eps
    assert poly_det(Matrix([[1, eps], [eps, 1]])) == Poly([1, 0, -1])
    assert poly_det(Matrix([[eps, eps * eps], [0, 0]])) == Poly()


def test_poly_det_evaluates_consistently(rng):
    for n in (2, 3, 4):
        entries = [[Poly([rng.randint(-3, 3) for _ in range(rng.randint(0, 4))]) for _ in range(n)]
                   for _ in range(n)]
        m = Matrix(entries)
        p = poly_det(m)
        for _ in range(10):
            c = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
            assert p(c) == det(m.evaluate(c))


def test_poly_minors_match_poly_det(rng):
    entries = [[Poly([rng.randint(-3, 3) for _ in range(3)]) for _ in range(5)] for _ in range(3)]
    m = Matrix(entries)
    sets = [[1, 2, 3], [1, 4, 5], [2, 3, 5]]
    for cols, p in zip(sets, poly_minors(m, sets)):
        assert p == poly_det(m.submatrix([0, 1, 2], [c - 1 for c in cols]))


def test_poly_ring_axioms(rng):
    def rand():
        return Poly([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(0, 5))])

    for _ in range(20):
        a, b, c = rand(), rand(), rand()
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a + b == b + a
        assert a - a == Poly()


def test_poly_trims_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).is_zero()


@pytest.mark.parametrize("text", ["-3/7", "2", "0", "12/5", "-1"])
def test_rational_text_round_trip(text):
    x = rational(text)
    assert str(x) == text
    assert rational(str(x)) == x


def test_rational_canonical_form():
    x = rational("-6/4")
    assert (x.numerator, x.denominator) == (-3, 2)
    with pytest.raises(ValueError):
        rational("1/0")
    with pytest.raises(ValueError):
        rational("one")


def test_mixed_matrix_is_promoted():
    m = Matrix([[Poly.eps(), 1], [0, 1]])
    assert m.is_poly and isinstance(m[0, 1], Poly)
