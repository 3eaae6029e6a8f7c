import random
import sys
from fractions import Fraction

import pytest

from skewtp.positivity import skew_matrix

from reference import A1, A2, A3


def random_rational(rng, lo=1, hi=50, signed=False):
    x = Fraction(rng.randint(lo, hi), rng.randint(1, hi))
    return -x if signed and rng.random() < 0.5 else x


def random_positive(rng, count):
    return [random_rational(rng) for _ in range(count)]


def random_skew(rng, n, hi=20):
    A = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = Fraction(rng.randint(-hi, hi), rng.randint(1, hi))
            A[i][j], A[j][i] = x, -x
    return A


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def a1():
    return skew_matrix(A1)


@pytest.fixture
def a2():
    return skew_matrix(A2)


@pytest.fixture
def a3():
    return skew_matrix(A3)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
