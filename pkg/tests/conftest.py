import random
from fractions import Fraction

import pytest

from latsimplex.corpus import random_corpus
from latsimplex.exact import RationalMatrix


@pytest.fixture(scope="session")
def corpus():
    # d <= 3, vertex coordinates in [-6, 6], nonempty interior
    return random_corpus(500, max_dim=3, seed=2024, coord_bound=6)


def random_rational(rng, num=9, den=6):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_matrix(rng, n, num=9, den=6):
    return RationalMatrix.from_rows([[random_rational(rng, num, den) for _ in range(n)]
                                     for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
