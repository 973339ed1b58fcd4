"""
Certified minimization of tau_d
===============================

The constrained minimum tau_d reduces to minimizing d univariate polynomials
f_1..f_d, each on its own interval.  Endpoints and critical points are handled
exactly, so the result is a certified lower bound.  A brute-force scan over a
rational grid gives an upper envelope to compare with.
"""
from latsimplex import build_univariate, minimize_univariate, tau_lower_bound
from latsimplex.tau import grid_search, lemma51_bound

###############################################################################
# One polynomial
# --------------

p = build_univariate(3, 1)
print("f_1 for d=3:", p.poly, "on", (str(p.lo), str(p.hi)))
m = minimize_univariate(p)
for c in m.candidates:
    print(f"  {c.kind:9s} at {c.where}: {c.lower}")

###############################################################################
# tau_d for small d
# -----------------

for d in range(1, 7):
    r = tau_lower_bound(d)
    line = f"d={d} tau >= {r.lower_bound} (ell={r.attaining_ell}, exact={r.is_exact})"
    if d >= 4:
        line += f", closed-form bound {lemma51_bound(d)}"
    print(line)

###############################################################################
# Grid cross-check
# ----------------

for d, n in [(2, 6), (2, 18), (3, 24)]:
    g = grid_search(d, n)
    print(f"d={d} N={n}: grid minimum {g.value} at {[str(b) for b in g.beta]} "
          f"({g.feasible_points} of {g.points} grid points feasible)")
