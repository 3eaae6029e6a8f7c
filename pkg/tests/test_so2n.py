from fractions import Fraction

import pytest

from skewtp.exact import Matrix, Poly, det
from skewtp.so2n import (
    ChartPoint,
    NotInChart,
    ParameterError,
    chart,
    deodhar_point,
    gram,
    is_group_element,
    marsh_rietsch,
    num_params,
    pi_n,
    point_from_skew,
    sdot,
    word_product,
    x_gen,
    z_family,
)
from skewtp.weyl import from_word, generator, identity, length, min_coset_reps, w0_coset_word

from conftest import random_positive, random_skew
from reference import Z4_EXPECTED, chart_n4


def x_matrix_n4(t):
    t1, t2, t3, t4, t5, t6 = (Fraction(x) for x in t)
    return [
        [1, t3, t3 * t5, 0, 0, 0, 0, t3 * t5 * t6],
        [0, 1, t2 + t5, t2 * t4, 0, 0, -t2 * t4 * t6, t2 * t6 + t5 * t6],
        [0, 0, 1, t4, 0, t1 * t4 * t5, -t1 * t4 - t4 * t6, t1 + t6],
        [0, 0, 0, 1, -t1 * t2 * t3, t1 * t2 + t1 * t5, -t1 - t6, 0],
    ]


def test_generators_lie_in_the_group(rng):
    for n in (2, 3, 4, 5):
        for i in range(1, n + 1):
            assert is_group_element(x_gen(n, i, Fraction(rng.randint(-9, 9), 7)))
            assert is_group_element(sdot(n, i))


def test_sdot_acts_as_the_reflection():
    """The lift of s_i permutes coordinate lines like s_i, up to sign."""
    for n in (3, 4):
        for i in range(1, n + 1):
            s = generator(n, i)
            m = sdot(n, i)
            for c in range(2 * n):
                column = [m[r, c] for r in range(2 * n)]
                nonzero = [r for r, x in enumerate(column) if x != 0]
                assert len(nonzero) == 1 and abs(column[nonzero[0]]) == 1
                assert nonzero[0] + 1 == s(c + 1)


def test_x_gen_is_additive():
    for i in (1, 3, 4):
        assert x_gen(4, i, 2) @ x_gen(4, i, 3) == x_gen(4, i, 5)
        assert x_gen(4, i, 0) == Matrix.identity(8)


def test_gram_is_split_form():
    q = gram(3)
    assert q[0, 3] == q[3, 0] == 1 and q[0, 0] == 0


def test_parametrization_n4(rng):
    for _ in range(5):
        t = random_positive(rng, 6)
        point = marsh_rietsch(4, t)
        assert point.X == Matrix(x_matrix_n4(t))
        assert chart(point) == Matrix(chart_n4(t))


def test_parametrization_lands_on_isotropic_planes(rng):
    for n in range(2, 7):
        point = marsh_rietsch(n, random_positive(rng, num_params(n)))
        assert point.is_isotropic()
        assert point.left_minor() == 1
        A = chart(point)
        assert A.is_skew()


def test_parameter_count_checked():
    with pytest.raises(ParameterError):
        marsh_rietsch(4, [1, 2, 3])


def test_chart_round_trip(rng):
    for n in (3, 4, 5):
        A = Matrix(random_skew(rng, n))
        point = point_from_skew(A)
        assert point.is_isotropic()
        assert chart(point) == A


def test_chart_is_independent_of_row_basis(rng):
    A = Matrix(random_skew(rng, 4))
    g = Matrix([[1, 2, 0, 0], [0, 1, 0, 3], [1, 0, 1, 0], [0, 0, 0, 2]])
    assert det(g) != 0
    assert chart(ChartPoint(g @ point_from_skew(A).X)) == A


def test_chart_rejects_singular_left_block():
    with pytest.raises(NotInChart):
        chart(pi_n(sdot(2, 2)))


def test_row_span_ignores_parabolic_factor(rng):
    t = random_positive(rng, 6)
    g = word_product(4, [x_gen(4, i, ti) for i, ti in zip(w0_coset_word(4), t)])
    for i in (1, 2, 3):
        moved = x_gen(4, i, Fraction(5, 3)) @ g
        assert chart(pi_n(moved)) == chart(pi_n(g))


def test_z_family_n4():
    Z = z_family(4)
    for i in range(8):
        for j in range(8):
            assert Z[i, j] == Poly(Z4_EXPECTED[i][j]), (i, j)


def test_z_family_constant_term_is_identity():
    for n in (3, 4, 5):
        assert z_family(n).evaluate(0) == Matrix.identity(2 * n)


def test_deodhar_point_top_cell_is_parametrization(rng):
    n = 4
    w = from_word(n, w0_coset_word(n))
    t = random_positive(rng, 6)
    assert deodhar_point(identity(n), w, t).X == marsh_rietsch(n, t).X


def test_deodhar_point_is_isotropic(rng):
    n = 4
    for w in min_coset_reps(n):
        point = deodhar_point(identity(n), w, random_positive(rng, length(w)))
        assert point.is_isotropic()


def test_deodhar_point_checks_inputs():
    n = 3
    w = from_word(n, w0_coset_word(n))
    with pytest.raises(ParameterError):
        deodhar_point(identity(n), w, [1])
    with pytest.raises(ParameterError):
        deodhar_point(identity(n), generator(n, 1), [])
