import itertools
import random
from fractions import Fraction
from math import floor

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_matrix
from latsimplex.errors import DegenerateError, DomainError, PreconditionError
from latsimplex.exact import RationalMatrix, det, inverse
from latsimplex.geometry import LatticeSimplex, barycentric, interior_points, maxmin_point
from latsimplex.prodsum import (
    build_ps_matrix,
    check_generalized,
    check_product_sum,
    find_small_image_vector,
    improve_point,
    improve_until_stable,
    ps_matrix_det_closed_form,
    small_image_vectors,
)
from latsimplex.sylvester import zpw_simplex

F = Fraction


def box_search(A):
    """All sign-normalized nonzero y with ||Ay|| < 1, by scanning the box that
    contains A^{-1}(-1, 1)^n."""
    Ainv = inverse(A)
    n = A.rows
    R = [floor(sum(abs(Ainv[i, j]) for j in range(n))) for i in range(n)]
    out = []
    for y in itertools.product(*(range(-r, r + 1) for r in R)):
        if any(y) and next(v for v in y if v) > 0 and all(abs(v) < 1 for v in A.apply(y)):
            out.append(y)
    return sorted(out)


def matrices_with_small_det(rng, count, max_cells=200_000):
    out = []
    while len(out) < count:
        A = random_matrix(rng, rng.randint(1, 4), num=4, den=5)
        D = det(A)
        if not 0 < abs(D) < 1:
            continue
        Ainv = inverse(A)
        cells = 1
        for i in range(A.rows):
            cells *= 2 * floor(sum(abs(Ainv[i, j]) for j in range(A.cols))) + 1
        if cells <= max_cells:
            out.append(A)
    return out


def test_zpw_point_equalities():
    S = zpw_simplex(3, 1)
    (p,) = interior_points(S)
    beta, _ = barycentric(S, p).sorted_view()
    rep = check_product_sum(beta)
    assert rep.all_hold and rep.tight == [1, 2]
    assert rep[3].lhs < rep[3].rhs


def test_unsorted_rejected():
    with pytest.raises(DomainError):
        check_product_sum([F(1, 4), F(3, 4)])
    with pytest.raises(DomainError):
        check_generalized([F(1, 2), F(1, 2), F(0)])


def test_matrix_small_cases():
    assert find_small_image_vector(RationalMatrix.from_rows([[F(1, 2)]])) == (1,)
    assert find_small_image_vector(RationalMatrix.from_rows([[F(9, 10), 0], [0, F(9, 10)]])) == (0, 1)
    A = build_ps_matrix([F(4, 5), F(1, 5)], 1)
    assert A.to_rows() == [[F(5, 3), F(-4, 3)], [-1, 1]]
    assert det(A) == F(1, 3)
    assert find_small_image_vector(A) == (1, 1)


def test_precondition():
    with pytest.raises(PreconditionError):
        find_small_image_vector(RationalMatrix.identity(2))
    with pytest.raises(PreconditionError):
        find_small_image_vector(RationalMatrix.from_rows([[1, 1], [1, 1]]))


def test_degenerate_gap():
    with pytest.raises(DegenerateError):
        build_ps_matrix([F(1, 3), F(1, 3), F(1, 3)], 1)


def test_det_closed_form_example():
    beta = [F(1, 2), F(1, 3), F(1, 12), F(1, 12)]
    A = build_ps_matrix(beta, 2)
    assert det(A) == ps_matrix_det_closed_form(beta, 2) == F(8, 5)


def test_solver_matches_box_search():
    rng = random.Random(31)
    for A in matrices_with_small_det(rng, 100):
        expected = box_search(A)
        assert expected, "determinant lemma guarantees a solution"
        assert small_image_vectors(A) == expected
        assert find_small_image_vector(A) == expected[0]


def test_segment_improvement():
    S = LatticeSimplex([[0], [5]])
    w = improve_point(S, (1,))
    assert (w.t, w.m, w.m_parts, w.q) == (1, 1, (1,), (2,))
    assert (w.old_gamma, w.new_gamma) == (F(1, 5), F(2, 5))
    assert improve_point(S, (2,)) is None


def test_non_interior_rejected():
    with pytest.raises(DomainError):
        improve_point(LatticeSimplex([[0], [5]]), (0,))


def test_generalized_holds_at_maxmin(corpus):
    for S in corpus:
        assert check_generalized(maxmin_point(S).beta).all_hold


def test_product_sum_for_single_point(corpus):
    singles = [S for S in corpus if len(interior_points(S)) == 1]
    assert singles
    for S in singles:
        assert check_product_sum(maxmin_point(S).beta).all_hold


def test_improvement_chain(corpus):
    for S in corpus[:150]:
        for p in interior_points(S):
            path = improve_until_stable(S, p)
            for a, b in zip(path, path[1:]):
                assert a.q == b.x and a.new_gamma == b.old_gamma
            for w in path:
                assert w.new_gamma > w.old_gamma
            end = path[-1].q if path else p
            assert check_generalized(barycentric(S, end).sorted_view()[0]).all_hold


betas = st.lists(st.integers(1, 40), min_size=2, max_size=6).map(
    lambda w: sorted((F(x, sum(w)) for x in w), reverse=True))


@settings(max_examples=150, deadline=None)
@given(betas)
def test_generalized_implies_weaker_bound(beta):
    # the generalized left side never exceeds the plain one
    g, p = check_generalized(beta), check_product_sum(beta)
    for t in range(1, len(beta)):
        assert g[t].lhs <= p[t].lhs and g[t].rhs == p[t].rhs


@settings(max_examples=150, deadline=None)
@given(betas, st.integers(1, 5))
def test_det_closed_form(beta, t):
    d = len(beta) - 1
    t = min(t, d)
    if beta[t - 1] == beta[-1]:
        with pytest.raises(DegenerateError):
            build_ps_matrix(beta, t)
        return
    A = build_ps_matrix(beta, t)
    assert det(A) == ps_matrix_det_closed_form(beta, t)
    # violation of the generalized inequality at t is exactly det < 1
    assert (det(A) < 1) == (not check_generalized(beta)[t].holds)
