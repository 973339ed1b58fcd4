"""
Product-sum inequalities and the improvement step
=================================================

At an interior lattice point whose minimal barycentric coordinate is as large
as possible, the sorted coordinates obey a family of product-sum inequalities.
When a point violates one of them, a nearby lattice point with a larger
minimal coordinate can be constructed.  Both facts are checked here on random
simplices.
"""
from collections import Counter

from latsimplex import (
    LatticeSimplex,
    barycentric,
    check_generalized,
    check_product_sum,
    improve_point,
    improve_until_stable,
    interior_points,
    maxmin_point,
    zpw_simplex,
)
from latsimplex.corpus import random_corpus

###############################################################################
# Equality cases
# --------------
# The one interior point of the 3-dimensional ZPW simplex makes the first two
# inequalities tight.

S = zpw_simplex(3, 1)
res = maxmin_point(S)
print("sorted beta:", [str(b) for b in res.beta])
for r in check_product_sum(res.beta).records:
    print(f"  t={r.t}: {r.lhs} <= {r.rhs}  tight={r.tight}")

###############################################################################
# One improvement step by hand
# ----------------------------
# On the segment [0, 5] the point 1 has minimal coordinate 1/5.  The step
# moves it to 2.

seg = LatticeSimplex([[0], [5]])
w = improve_point(seg, (1,))
print(f"t={w.t} m={w.m} q={w.q} gamma {w.old_gamma} -> {w.new_gamma}")

###############################################################################
# Random simplices
# ----------------
# From every interior point, iterate the step until nothing is violated and
# record how many steps were needed.

corpus = random_corpus(150, max_dim=3, seed=7)
steps = Counter()
for T in corpus:
    assert check_generalized(maxmin_point(T).beta).all_hold
    for p in interior_points(T):
        path = improve_until_stable(T, p)
        steps[len(path)] += 1
        end = path[-1].q if path else p
        assert check_generalized(barycentric(T, end).sorted_view()[0]).all_hold
print("steps needed:", dict(sorted(steps.items())))
