"""Acceptance criteria, each at its stated tolerance and time limit.

Every criterion records one PASS/FAIL line; the lines are printed in the
pytest terminal summary, or directly when this file is run as a script.
"""
import random
import time
from fractions import Fraction
from math import prod

from latsimplex.bounds import pikhurko_old_bound, theorem12_bound, thm15a_threshold
from latsimplex.corpus import random_corpus
from latsimplex.exact import RationalMatrix, det, poly_eval
from latsimplex.geometry import LatticeSimplex, barycentric, interior_points, maxmin_point, volume
from latsimplex.prodsum import check_generalized, check_product_sum, find_small_image_vector, improve_point, improve_until_stable
from latsimplex.sylvester import SylvesterCache, zpw_simplex, zpw_volume
from latsimplex.tau import (
    build_univariate,
    grid_search,
    interval_for,
    is_feasible,
    objective,
    reconstruct_beta,
    tau_lower_bound,
)

F = Fraction
RESULTS = {}

def record(n, title, limit, body):
    """Run body(), which returns a list of failure strings, and check the time."""
    t0 = time.perf_counter()
    failures = body()
    elapsed = time.perf_counter() - t0
    if elapsed >= limit:
        failures.append(f"took {elapsed:.3g}s, limit {limit}s")
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {n:>2} {status} ({elapsed:.3g}s < {limit}s) {title}"
    if failures:
        line += ": " + "; ".join(failures[:3])
    RESULTS[n] = line
    print(line)
    assert not failures, line

_CORPUS = {}

def corpus500():
    # d <= 3, vertex coordinates in [-6, 6], nonempty interior
    if "c" not in _CORPUS:
        _CORPUS["c"] = random_corpus(500, max_dim=3, seed=2024, coord_bound=6)
    return _CORPUS["c"]

def test_c01_sylvester():
    expected = [2, 3, 7, 43, 1807, 3263443]
    # second code path: s_i = 1 + prod of the earlier terms
    ref = [2]
    while len(ref) < 6:
        ref.append(1 + prod(ref))

    def body():
        cache = SylvesterCache()
        got = [cache.get(i) for i in range(1, 7)]
        return [] if got == expected == ref else [f"got {got}"]

    record(1, "Sylvester s_1..s_6", 0.001, body)

def test_c02_zpw():
    def body():
        bad = []
        for d in range(1, 5):
            for k in range(1, 6):
                S = zpw_simplex(d, k)
                n = len(interior_points(S))
                if n != k or volume(S) != zpw_volume(d, k):
                    bad.append(f"(d={d},k={k}) count={n}")
        return bad

    record(2, "ZPW interior counts and volumes, d<=4, k<=5", 30, body)

def test_c03_product_sum_equalities():
    def body():
        S = zpw_simplex(3, 1)
        (p,) = interior_points(S)
        beta, _ = barycentric(S, p).sorted_view()
        if beta.entries != (F(1, 2), F(1, 3), F(1, 12), F(1, 12)):
            return [f"beta={beta.entries}"]
        rep = check_product_sum(beta)
        ok = rep[1].tight and rep[2].tight and rep[3].lhs < rep[3].rhs
        return [] if ok else [f"tight={rep.tight}"]

    record(3, "product-sum tight at t=1,2 and strict at t=3 for S_{3,1}", 1, body)

def test_c04_c10_maxmin_properties():
    res = {}

    def body4():
        bad = []
        res["mm"] = []
        for S in corpus500():
            r = maxmin_point(S)
            res["mm"].append(r)
            rep = check_generalized(r.beta)
            if not rep.all_hold:
                bad.append(f"{S.vertices} at {r.point}: t={rep.violated}")
        return bad

    record(4, "generalized product-sum at the max-min point, 500 simplices", 60, body4)

    def body10():
        bad = []
        for S, r in zip(corpus500(), res["mm"]):
            if r.gamma < thm15a_threshold(S.dimension):
                bad.append(f"{S.vertices}: gamma={r.gamma}")
        return bad

    record(10, "max-min gamma >= 1/((d+1)(s_{d+1}-1)) on the same corpus", 60, body10)

def test_c05_improvement():
    corpus = corpus500()

    def body():
        bad = []
        w = improve_point(LatticeSimplex([[0], [5]]), (1,))
        if (w.m, w.m_parts, w.q, w.old_gamma, w.new_gamma) != (1, (1,), (2,), F(1, 5), F(2, 5)):
            bad.append(f"segment witness {w}")
        for S in corpus:
            for p in interior_points(S):
                path = improve_until_stable(S, p)
                gam = [barycentric(S, p).min] + [x.new_gamma for x in path]
                end = path[-1].q if path else p
                if not all(a < b for a, b in zip(gam, gam[1:])):
                    bad.append(f"{S.vertices} from {p}: gamma {gam}")
                elif not check_generalized(barycentric(S, end).sorted_view()[0]).all_hold:
                    bad.append(f"{S.vertices} from {p}: stopped at {end}")
        return bad

    record(5, "improvement step on [0,5] and convergence over the corpus", 60, body)

def test_c06_determinant_lemma():
    rng = random.Random(606)
    mats = []
    while len(mats) < 100:
        n = rng.randint(1, 4)
        A = RationalMatrix.from_rows([[F(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n)]
                                      for _ in range(n)])
        if 0 < abs(det(A)) < 1:
            mats.append(A)

    def body():
        bad = []
        for A in mats:
            y = find_small_image_vector(A)
            if not any(y) or not all(abs(v) < 1 for v in A.apply(y)):
                bad.append(f"{A.to_rows()} -> {y}")
        return bad

    record(6, "small image vector for 100 matrices with 0<|det|<1, n<=4", 10, body)

def test_c07_tau_values():
    def body():
        bad = []
        cases = [(2, F(1, 9), (F(2, 3), F(1, 6), F(1, 6)), 18),
                 (3, F(13, 1536), (F(13, 24), F(9, 24), F(1, 24), F(1, 24)), 24)]
        for d, val, beta, n in cases:
            r = tau_lower_bound(d)
            if r.lower_bound != val or r.attaining_beta.entries != beta:
                bad.append(f"d={d}: {r.lower_bound} at {r.attaining_beta}")
            if not is_feasible(beta, d).feasible or objective(beta, d) != val:
                bad.append(f"d={d}: attaining beta infeasible")
            g = grid_search(d, n)
            if g.value != val:
                bad.append(f"d={d}: grid N={n} gives {g.value}")
        return bad

    record(7, "tau_2 = 1/9 and tau_3 = 13/1536, matched by the grid at N=18, 24", 60, body)

def test_c08_tau4():
    def body():
        r = tau_lower_bound(4)
        return [] if r.lower_bound >= F(1, 8820) else [f"tau_4 >= {r.lower_bound}"]

    record(8, "certified tau_4 lower bound >= 1/8820", 10, body)

def test_c09_bound_sandwich():
    def body():
        bad = []
        for d in range(1, 9):
            for k in range(1, 6):
                z, t = zpw_volume(d, k), theorem12_bound(d, k)
                if not z <= t <= (d + 1) * z:
                    bad.append(f"sandwich fails at d={d}, k={k}")
        for d in range(1, 7):
            t, old = theorem12_bound(d, 1), pikhurko_old_bound(d, 1)
            if not t < old:
                bad.append(f"theorem12_bound({d},1) = {t} is not below the old bound {old}")
        return bad

    record(9, "zpw <= theorem12 <= (d+1) zpw and theorem12 < old bound for d<=6", 1, body)

def test_c11_consistency_seam():
    rng = random.Random(1111)

    def body():
        bad = []
        for d in range(1, 7):
            polys = {ell: build_univariate(d, ell) for ell in range(1, d + 1)}
            for ell in range(1, d):
                a = interval_for(d, ell)[0]
                if poly_eval(polys[ell].poly, a) != poly_eval(polys[ell + 1].poly, a):
                    bad.append(f"seam d={d}, ell={ell}")
            for ell, p in polys.items():
                for _ in range(100):
                    a = p.lo + (p.hi - p.lo) * F(rng.randint(0, 10 ** 6), 10 ** 6)
                    if objective(reconstruct_beta(d, ell, a), d) != poly_eval(p.poly, a):
                        bad.append(f"reconstruct d={d}, ell={ell}, a={a}")
        return bad

    record(11, "f_ell seams agree and reconstructed objective equals f_ell, d<=6", 5, body)

if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                pass
