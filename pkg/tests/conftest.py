import random
from fractions import Fraction

import pytest

from wdglab import build_wdg


def make_random_wdg(rng, dimension, max_denominator=16, edge_probability=0.6):
    """A random canonical graph with weights num/den, |num| <= max_denominator."""
    edges = []
    for u in range(dimension):
        for v in range(u + 1, dimension):
            if rng.random() < edge_probability:
                num = rng.randint(-max_denominator, max_denominator)
                if num == 0:
                    continue
                edges.append((u, v, Fraction(num, rng.randint(1, max_denominator))))
    shift = Fraction(rng.randint(-8, 8), rng.randint(1, max_denominator))
    return build_wdg(dimension, edges, shift)


@pytest.fixture
def random_wdg():
    return make_random_wdg


@pytest.fixture
def rng():
    return random.Random(20240811)


@pytest.fixture
def six_vertex_example():
    """6-vertex graph: f = (x2 + x5 - x1*x2 - x3*x4)/8 + 1/2; spread exactly 1."""
    return build_wdg(
        6,
        [
            (0, 2, Fraction(1, 8)),
            (0, 5, Fraction(1, 8)),
            (1, 2, Fraction(-1, 8)),
            (3, 4, Fraction(-1, 8)),
        ],
        Fraction(1, 2),
    )


@pytest.fixture
def pair_left():
    """3-vertex graph: f = x1/3 - x2/6 + 1/2 (L1 norm 1/2)."""
    return build_wdg(
        3,
        [(0, 1, Fraction(1, 3)), (0, 2, Fraction(-1, 6))],
        Fraction(1, 2),
    )


@pytest.fixture
def pair_right():
    """3-vertex graph: f = x1/4 + x2/6 - x1*x2/4 + 2/3 (L1 norm 2/3)."""
    return build_wdg(
        3,
        [(0, 1, Fraction(1, 4)), (0, 2, Fraction(1, 6)), (1, 2, Fraction(-1, 4))],
        Fraction(2, 3),
    )
