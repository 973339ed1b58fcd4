from fractions import Fraction
from math import factorial, prod

import pytest

from latsimplex.errors import DomainError
from latsimplex.sylvester import (
    SylvesterCache,
    sylvester,
    sylvester_list,
    sylvester_unit_identity,
    zpw_vertices,
    zpw_volume,
)


def test_first_terms():
    assert sylvester_list(6) == [2, 3, 7, 43, 1807, 3263443]


def test_product_definition():
    # s_i = 1 + s_1 ... s_{i-1}, evaluated independently of the recurrence
    s = [2]
    for _ in range(14):
        s.append(1 + prod(s))
    assert sylvester_list(15) == s


@pytest.mark.parametrize("ell", range(1, 12))
def test_unit_fraction_identity(ell):
    s = sylvester_list(ell)
    assert sum(Fraction(1, x) for x in s) + Fraction(1, prod(s)) == 1
    assert sylvester_unit_identity(ell) == 1


def test_bad_index():
    with pytest.raises(DomainError):
        sylvester(0)


def test_cache_is_independent():
    c = SylvesterCache()
    assert c.get(5) == 1807 and len(c) >= 5
    assert c.values[:3] == (2, 3, 7)


def test_zpw_shape():
    assert zpw_vertices(3, 1) == [[0, 0, 0], [2, 0, 0], [0, 3, 0], [0, 0, 12]]
    assert zpw_vertices(1, 4) == [[0], [5]]


@pytest.mark.parametrize("d,k", [(1, 1), (2, 3), (3, 1), (4, 2), (6, 5)])
def test_zpw_volume_formula(d, k):
    s = sylvester_list(d)
    legs = s[:-1] + [(k + 1) * (s[-1] - 1)]
    assert zpw_volume(d, k) == Fraction(prod(legs), factorial(d))
    assert zpw_volume(d, k) == Fraction((k + 1) * (s[-1] - 1) ** 2, factorial(d))
