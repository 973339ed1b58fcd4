"""The minimization problem behind the volume bound and its univariate relaxation.

tau_d is the minimum of b_1 * ... * b_d over vectors b in R^{d+1} with

    1 >= b_1 >= b_2 >= ... >= b_{d+1} >= 0,     b_1 + ... + b_{d+1} = 1,
    prod_{i<=t} (b_i - b_{d+1}) <= sum_{j>t} (b_j - b_{d+1}) + (d+1) b_{d+1}   (t = 1..d).

Optimal solutions are parameterized by their smallest coordinate alpha on d
intervals, which turns the problem into d univariate polynomial minimizations.
Each of those is solved with certified critical-point isolation.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Optional, Sequence, Union

from .errors import BudgetError, DomainError
from .exact import (
    RationalPolynomial,
    RootEnclosure,
    as_rational,
    eval_interval,
    format_rational,
    isolate_roots,
    poly_derivative,
    poly_eval,
    refine_root,
)
from .geometry import BetaVector
from .sylvester import sylvester

STRICT, TIGHT, VIOLATED = "strict", "tight", "violated"
DEFAULT_TOLERANCE = Fraction(1, 10**30)
DEFAULT_GRID_BUDGET = 10**7


def _status(lhs, rhs) -> str:
    """Status of the inequality lhs <= rhs."""
    if lhs < rhs:
        return STRICT
    return TIGHT if lhs == rhs else VIOLATED


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    sum_ok: bool
    nonneg_status: str            # b_{d+1} >= 0
    ord_status: tuple             # index t = 0..d; ORD(0) is 1 >= b_1
    ps_status: tuple              # index t-1 for t = 1..d
    ps_lhs: tuple = field(default=(), repr=False)
    ps_rhs: tuple = field(default=(), repr=False)

    def ord(self, t: int) -> str:
        return self.ord_status[t]

    def ps(self, t: int) -> str:
        return self.ps_status[t - 1]

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "sum_ok": self.sum_ok,
            "nonneg": self.nonneg_status,
            "ord": list(self.ord_status),
            "ps": list(self.ps_status),
        }


def ps_sides(beta: Sequence, t: int) -> tuple:
    """(lhs, rhs) of the relaxed product-sum constraint at index t."""
    b = [as_rational(x) for x in beta]
    d = len(b) - 1
    last = b[-1]
    lhs = prod((b[i] - last for i in range(t)), start=Fraction(1))
    rhs = sum((b[j] - last for j in range(t, d + 1)), Fraction(0)) + (d + 1) * last
    return lhs, rhs


def is_feasible(beta: Sequence, d: int) -> FeasibilityReport:
    b = [as_rational(x) for x in beta]
    if len(b) != d + 1:
        raise DomainError(f"expected {d + 1} coordinates, got {len(b)}")
    sum_ok = sum(b, Fraction(0)) == 1
    nonneg = _status(0, b[-1])
    ords = [_status(b[0], 1)] + [_status(b[t], b[t - 1]) for t in range(1, d + 1)]
    lhs, rhs, pss = [], [], []
    for t in range(1, d + 1):
        l, r = ps_sides(b, t)
        lhs.append(l)
        rhs.append(r)
        pss.append(_status(l, r))
    feasible = sum_ok and nonneg != VIOLATED and VIOLATED not in ords and VIOLATED not in pss
    return FeasibilityReport(feasible, sum_ok, nonneg, tuple(ords), tuple(pss),
                             tuple(lhs), tuple(rhs))


@dataclass(frozen=True)
class Lemma31Report:
    all_positive: bool
    ord_or_ps_strict: bool
    tight_prefix: int       # largest l with PS(1..l) tight
    sylvester_relation: bool  # b_i - b_{d+1} == 1/s_i for i <= tight_prefix

    @property
    def ok(self) -> bool:
        return self.all_positive and self.ord_or_ps_strict and self.sylvester_relation


def check_lemma31(beta: Sequence, d: int) -> Lemma31Report:
    """Structural facts every feasible point satisfies: all coordinates are
    positive, ORD(t) and PS(t) are never both tight, and a tight PS prefix
    pins b_i - b_{d+1} to 1/s_i."""
    rep = is_feasible(beta, d)
    if not rep.feasible:
        raise DomainError("point is not feasible")
    b = [as_rational(x) for x in beta]
    positive = all(x > 0 for x in b)
    strict = all(not (rep.ord(t) == TIGHT and rep.ps(t) == TIGHT) for t in range(1, d + 1))
    ell = 0
    while ell < d and rep.ps(ell + 1) == TIGHT:
        ell += 1
    rel = all(b[i - 1] - b[-1] == Fraction(1, sylvester(i)) for i in range(1, ell + 1))
    return Lemma31Report(positive, strict, ell, rel)


@dataclass(frozen=True)
class UnivariateProblem:
    ell: int
    d: int
    poly: RationalPolynomial
    lo: Fraction
    hi: Fraction


def interval_for(d: int, ell: int) -> tuple:
    return (Fraction(1, (d + 1) * (sylvester(ell + 1) - 1)),
            Fraction(1, (d + 1) * (sylvester(ell) - 1)))


def build_univariate(d: int, ell: int) -> UnivariateProblem:
    """f_ell(a) = prod_{i<ell} (1/s_i + a) * (1/(s_ell - 1) - d a) * a^(d-ell)."""
    if d < 1:
        raise DomainError("d must be >= 1")
    if not 1 <= ell <= d:
        raise DomainError(f"ell must lie in 1..{d}, got {ell}")
    p = RationalPolynomial((1,))
    for i in range(1, ell):
        p = p * RationalPolynomial((Fraction(1, sylvester(i)), 1))
    p = p * RationalPolynomial((Fraction(1, sylvester(ell) - 1), -d))
    p = p * RationalPolynomial.monomial(d - ell)
    lo, hi = interval_for(d, ell)
    return UnivariateProblem(ell, d, p, lo, hi)


@dataclass(frozen=True)
class Candidate:
    where: Union[Fraction, RootEnclosure]
    lower: Fraction
    upper: Fraction
    kind: str  # "endpoint" or "critical"

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper


@dataclass(frozen=True)
class UnivariateMinimum:
    ell: int
    min_lower: Fraction
    min_upper: Fraction
    attained_at: Union[Fraction, RootEnclosure]
    candidates: tuple = field(default=(), repr=False)

    @property
    def is_exact(self) -> bool:
        return self.min_lower == self.min_upper


def minimize_univariate(p: UnivariateProblem, tolerance=DEFAULT_TOLERANCE) -> UnivariateMinimum:
    """Certified minimum of f_ell over its interval.

    The minimum of a polynomial on a closed interval sits at an endpoint or a
    real root of the derivative inside it.  Endpoints and rational critical
    points are evaluated exactly; irrational critical points are enclosed and
    the value there bounded by interval evaluation until the bound is tighter
    than ``tolerance``.
    """
    tolerance = as_rational(tolerance)
    if tolerance <= 0:
        raise DomainError("tolerance must be positive")
    f = p.poly
    cands = [Candidate(p.lo, poly_eval(f, p.lo), poly_eval(f, p.lo), "endpoint"),
             Candidate(p.hi, poly_eval(f, p.hi), poly_eval(f, p.hi), "endpoint")]
    df = poly_derivative(f)
    if not df.is_zero():
        for enc in isolate_roots(df, p.lo, p.hi):
            if enc.is_exact:
                v = poly_eval(f, enc.lo)
                cands.append(Candidate(enc.lo, v, v, "critical"))
                continue
            while True:
                lo_v, hi_v = eval_interval(f, enc.lo, enc.hi)
                if hi_v - lo_v < tolerance:
                    break
                enc = refine_root(df, enc, enc.width / 2)
                if enc.is_exact:
                    lo_v = hi_v = poly_eval(f, enc.lo)
                    break
            # any point of [lo, hi] bounds the minimum from above
            up = min(hi_v, poly_eval(f, enc.midpoint))
            cands.append(Candidate(enc.lo if enc.is_exact else enc, lo_v, up, "critical"))
    best = min(cands, key=lambda c: (c.lower, not c.is_exact))
    return UnivariateMinimum(
        p.ell,
        min(c.lower for c in cands),
        min(c.upper for c in cands),
        best.where,
        tuple(cands),
    )


def reconstruct_beta(d: int, ell: int, alpha) -> BetaVector:
    """Coordinates with smallest entry alpha that lie on the ell-th branch:
    b_i = 1/s_i + alpha (i < ell), b_ell = 1/(s_ell - 1) - d alpha, the rest alpha."""
    alpha = as_rational(alpha)
    if not 1 <= ell <= d:
        raise DomainError(f"ell must lie in 1..{d}, got {ell}")
    lo, hi = interval_for(d, ell)
    if not lo <= alpha <= hi:
        raise DomainError(f"alpha={alpha} outside [{lo}, {hi}]")
    b = [Fraction(1, sylvester(i)) + alpha for i in range(1, ell)]
    b.append(Fraction(1, sylvester(ell) - 1) - d * alpha)
    b.extend([alpha] * (d + 1 - ell))
    return BetaVector(tuple(b))


def objective(beta: Sequence, d: int) -> Fraction:
    return prod((as_rational(x) for x in list(beta)[:d]), start=Fraction(1))


@dataclass(frozen=True)
class TauResult:
    d: int
    lower_bound: Fraction
    attaining_ell: int
    attaining_beta: Optional[BetaVector]
    is_exact: bool
    minima: tuple = field(default=(), repr=False)
    grid_upper: Optional[Fraction] = None
    grid_beta: Optional[tuple] = None

    def to_json(self) -> dict:
        out = {
            "d": self.d,
            "lower_bound": format_rational(self.lower_bound),
            "attaining_ell": self.attaining_ell,
            "attaining_beta": self.attaining_beta.to_json() if self.attaining_beta else None,
            "is_exact": self.is_exact,
            "minima": [
                {
                    "ell": m.ell,
                    "min_lower": format_rational(m.min_lower),
                    "min_upper": format_rational(m.min_upper),
                    "attained_at": (format_rational(m.attained_at) if isinstance(m.attained_at, Fraction)
                                    else [format_rational(m.attained_at.lo), format_rational(m.attained_at.hi)]),
                }
                for m in self.minima
            ],
        }
        if self.grid_upper is not None:
            out["grid_upper"] = format_rational(self.grid_upper)
            out["grid_beta"] = [format_rational(x) for x in self.grid_beta]
        return out


def tau_lower_bound(d: int, tolerance=DEFAULT_TOLERANCE) -> TauResult:
    """Certified lower bound min_ell f*_ell on tau_d, flagged exact when the
    minimizer reconstructs to a feasible point with the same objective."""
    if d < 1:
        raise DomainError("d must be >= 1")
    minima = tuple(minimize_univariate(build_univariate(d, ell), tolerance)
                   for ell in range(1, d + 1))
    best = min(minima, key=lambda m: (m.min_lower, m.ell))
    lower = best.min_lower
    beta = None
    exact = False
    if isinstance(best.attained_at, Fraction):
        beta = reconstruct_beta(d, best.ell, best.attained_at)
        exact = is_feasible(beta, d).feasible and objective(beta, d) == lower
    return TauResult(d, lower, best.ell, beta, exact, minima)


def lemma51_bound(d: int) -> Fraction:
    """1 / ((d+1)(s_d - 1)^2); proven to bound tau_d from below for d >= 4."""
    if d < 1:
        raise DomainError("d must be >= 1")
    if d < 4:
        warnings.warn(f"the bound is only established for d >= 4 (got d={d})", stacklevel=2)
    return Fraction(1, (d + 1) * (sylvester(d) - 1) ** 2)


def _partitions(total: int, parts: int, cap: int):
    """Non-increasing tuples of ``parts`` non-negative ints <= cap summing to total."""
    if parts == 1:
        if total <= cap:
            yield (total,)
        return
    for first in range(min(total, cap), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


@dataclass(frozen=True)
class GridResult:
    value: Optional[Fraction]
    beta: Optional[tuple]
    points: int
    feasible_points: int


def grid_search(d: int, steps: int, budget: int = DEFAULT_GRID_BUDGET, feasible=None) -> GridResult:
    """Exhaustive scan of descending vectors with entries in {0, 1/N, ..., 1}
    summing to 1; returns the smallest objective over the feasible ones."""
    if d < 1 or steps < 1:
        raise DomainError("need d >= 1 and steps >= 1")
    feasible = feasible or (lambda b: is_feasible(b, d).feasible)
    best, best_beta = None, None
    n = nf = 0
    for parts in _partitions(steps, d + 1, steps):
        n += 1
        if n > budget:
            raise BudgetError(f"grid has more than {budget} points")
        b = tuple(Fraction(p, steps) for p in parts)
        if not feasible(b):
            continue
        nf += 1
        v = objective(b, d)
        if best is None or v < best:
            best, best_beta = v, b
    return GridResult(best, best_beta, n, nf)


def grid_oracle(d: int, steps: int, budget: int = DEFAULT_GRID_BUDGET) -> Optional[Fraction]:
    return grid_search(d, steps, budget).value
