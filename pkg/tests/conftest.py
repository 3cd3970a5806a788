import random
from fractions import Fraction

import pytest

from viswidth import generate_comb, make_chord
from viswidth.randpoly import l_shape, random_simple_polygon, square


@pytest.fixture(scope="session")
def sq():
    return square()


@pytest.fixture(scope="session")
def L():
    return l_shape()


@pytest.fixture(scope="session")
def L_left(L):
    return make_chord(L, (0, 0), (0, 2))


@pytest.fixture(scope="session")
def combs():
    return {k: generate_comb(k) for k in range(1, 5)}


@pytest.fixture(scope="session")
def random_polys():
    return [random_simple_polygon(s) for s in range(50)]


def F(a, b=1):
    return Fraction(a, b)


@pytest.fixture
def rng():
    return random.Random(12345)
