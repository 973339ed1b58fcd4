"""Product-sum inequalities for barycentric coordinates and the constructive
interior-point improvement step.

For a lattice simplex S and an interior lattice point x with descending
barycentric coordinates b_1 >= ... >= b_{d+1} the two families checked here are

    prod_{i<=t} b_i            <= sum_{j>t} b_j     (product-sum)
    prod_{i<=t} (b_i - b_{d+1}) <= sum_{j>t} b_j     (generalized product-sum)

for t = 1..d.  When the generalized form fails at some t, :func:`improve_point`
produces another interior lattice point with a strictly larger minimum
barycentric coordinate, so the inequality holds at every max-min point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod
from typing import Optional, Sequence

from .errors import (
    BudgetError,
    DegenerateError,
    DimensionError,
    DomainError,
    InvariantViolation,
    PreconditionError,
)
from .exact import RationalMatrix, as_rational, det, format_rational
from .geometry import LatticeSimplex, barycentric, is_interior

DEFAULT_SEARCH_BUDGET = 10**7


@dataclass(frozen=True)
class PsRecord:
    t: int
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"t": self.t, "lhs": format_rational(self.lhs), "rhs": format_rational(self.rhs),
                "holds": self.holds, "tight": self.tight}


@dataclass(frozen=True)
class PsCheckReport:
    kind: str  # "product-sum" or "generalized"
    records: tuple

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.records)

    @property
    def violated(self) -> list:
        return [r.t for r in self.records if not r.holds]

    @property
    def tight(self) -> list:
        return [r.t for r in self.records if r.tight]

    def __getitem__(self, t: int) -> PsRecord:
        return self.records[t - 1]

    def to_json(self) -> dict:
        return {"kind": self.kind, "all_hold": self.all_hold,
                "records": [r.to_json() for r in self.records]}


def _sorted_entries(beta) -> tuple:
    e = tuple(as_rational(b) for b in beta)
    if len(e) < 2:
        raise DimensionError("need at least two coordinates")
    if sum(e, Fraction(0)) != 1:
        raise DomainError("coordinates do not sum to 1")
    if any(e[i] < e[i + 1] for i in range(len(e) - 1)):
        raise DomainError("coordinates must be sorted in descending order")
    if not all(0 < b < 1 for b in e):
        raise DomainError("coordinates must lie strictly between 0 and 1")
    return e


def _tail_sums(e) -> list:
    """tails[t] = e[t] + ... + e[-1] (0-based t)."""
    tails = [Fraction(0)] * (len(e) + 1)
    for i in range(len(e) - 1, -1, -1):
        tails[i] = tails[i + 1] + e[i]
    return tails


def check_product_sum(beta: Sequence) -> PsCheckReport:
    e = _sorted_entries(beta)
    d = len(e) - 1
    tails = _tail_sums(e)
    recs = []
    p = Fraction(1)
    for t in range(1, d + 1):
        p *= e[t - 1]
        recs.append(PsRecord(t, p, tails[t]))
    return PsCheckReport("product-sum", tuple(recs))


def check_generalized(beta: Sequence) -> PsCheckReport:
    e = _sorted_entries(beta)
    d = len(e) - 1
    last = e[-1]
    tails = _tail_sums(e)
    recs = []
    p = Fraction(1)
    for t in range(1, d + 1):
        p *= e[t - 1] - last
        recs.append(PsRecord(t, p, tails[t]))
    return PsCheckReport("generalized", tuple(recs))


def build_ps_matrix(beta: Sequence, t: int) -> RationalMatrix:
    """The (t+1)x(t+1) matrix whose max-norm condition encodes the improvement
    step: diagonal 1/(b_i - b_last), last column -b_i/(b_i - b_last), last row
    (-1, ..., -1, 1)."""
    e = _sorted_entries(beta)
    d = len(e) - 1
    if not 1 <= t <= d:
        raise DomainError(f"t must lie in 1..{d}, got {t}")
    last = e[-1]
    n = t + 1
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(t):
        gap = e[i] - last
        if gap == 0:
            raise DegenerateError(f"coordinate {i + 1} equals the smallest coordinate")
        rows[i][i] = 1 / gap
        rows[i][t] = -e[i] / gap
    rows[t] = [Fraction(-1)] * t + [Fraction(1)]
    return RationalMatrix.from_rows(rows)


def ps_matrix_det_closed_form(beta: Sequence, t: int) -> Fraction:
    e = _sorted_entries(beta)
    return sum(e[t:], Fraction(0)) / prod(b - e[-1] for b in e[:t])


def _lower_triangularize(B: list):
    """Integer column operations giving ``T = B U`` lower triangular with a
    positive diagonal and ``U`` unimodular.  Returns ``(T, U)``."""
    n = len(B)
    T = [row[:] for row in B]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_axpy(dst, src, q):  # col[dst] -= q * col[src]
        for M in (T, U):
            for r in range(n):
                M[r][dst] -= q * M[r][src]

    def col_swap(a, b):
        for M in (T, U):
            for r in range(n):
                M[r][a], M[r][b] = M[r][b], M[r][a]

    for i in range(n):
        for j in range(i + 1, n):
            while T[i][j] != 0:
                if T[i][i] == 0:
                    col_swap(i, j)
                    continue
                q = T[i][j] // T[i][i]
                col_axpy(j, i, q)
                if T[i][j] != 0:
                    col_swap(i, j)
        if T[i][i] < 0:
            for M in (T, U):
                for r in range(n):
                    M[r][i] = -M[r][i]
        if T[i][i] == 0:
            raise PreconditionError("matrix is singular")
    return T, U


def _max_norm_below_one(A: RationalMatrix, y) -> bool:
    return all(abs(v) < 1 for v in A.apply(y))


def small_image_vectors(A: RationalMatrix, budget: int = DEFAULT_SEARCH_BUDGET) -> list:
    """Every nonzero integer y with ||A y||_inf < 1, sign-normalized so that the
    first nonzero entry is positive, in lexicographic order.

    The set {y : ||Ay|| < 1} is a bounded open parallelepiped.  After a
    unimodular change of variables y = U w that makes the scaled matrix lower
    triangular, its lattice points are enumerated coordinate by coordinate with
    exact integer interval bounds, so the search is exhaustive.
    """
    if not A.is_square:
        raise DimensionError("matrix must be square")
    n = A.rows
    L = lcm(*(e.denominator for e in A.entries))
    B = [[int(A[i, j] * L) for j in range(n)] for i in range(n)]
    T, U = _lower_triangularize(B)
    found = set()
    nodes = 0
    w = [0] * n

    def rec(i):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetError(f"lattice search exceeded {budget} nodes")
        if i == n:
            if any(w):
                y = [sum(U[r][c] * w[c] for c in range(n)) for r in range(n)]
                first = next(v for v in y if v)
                if first < 0:
                    y = [-v for v in y]
                found.add(tuple(y))
            return
        s = sum(T[i][j] * w[j] for j in range(i))
        tii = T[i][i]
        # |s + tii * w_i| < L
        lo = -((L + s - 1) // tii)
        hi = (L - s - 1) // tii
        for v in range(lo, hi + 1):
            w[i] = v
            rec(i + 1)
        w[i] = 0

    rec(0)
    return sorted(found)


def find_small_image_vector(A: RationalMatrix, budget: int = DEFAULT_SEARCH_BUDGET) -> tuple:
    """Lexicographically smallest sign-normalized nonzero integer y with
    ||A y||_inf < 1.  Requires 0 < |det A| < 1, which guarantees existence."""
    if not A.is_square:
        raise DimensionError("matrix must be square")
    D = det(A)
    if D == 0 or abs(D) >= 1:
        raise PreconditionError(f"need 0 < |det A| < 1, got det A = {D}")
    sols = small_image_vectors(A, budget)
    if not sols:
        raise InvariantViolation("no small image vector although 0 < |det A| < 1")
    y = sols[0]
    if not any(y) or not _max_norm_below_one(A, y):
        raise InvariantViolation(f"search returned an invalid vector {y}")
    return y


@dataclass(frozen=True)
class ImprovementWitness:
    t: int
    m: int
    m_parts: tuple
    r: tuple  # rational point in the affine hull of the t vertices with largest coordinates
    q: tuple
    old_gamma: Fraction
    new_gamma: Fraction
    x: tuple = ()

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "m": format_rational(self.m),
            "m_parts": [format_rational(v) for v in self.m_parts],
            "r": [format_rational(v) for v in self.r],
            "x": [format_rational(v) for v in self.x],
            "q": [format_rational(v) for v in self.q],
            "old_gamma": format_rational(self.old_gamma),
            "new_gamma": format_rational(self.new_gamma),
        }


def improve_point(
    S: LatticeSimplex, x: Sequence[int], budget: int = DEFAULT_SEARCH_BUDGET
) -> Optional[ImprovementWitness]:
    """One improvement step, or ``None`` if every generalized inequality holds at x.

    The smallest violated t is used.
    """
    x = tuple(int(c) for c in x)
    if len(x) != S.dimension or not is_interior(S, x):
        raise DomainError(f"{x} is not an interior lattice point of {S!r}")
    beta, order = barycentric(S, x).sorted_view()
    report = check_generalized(beta)
    if report.all_hold:
        return None
    t = report.violated[0]
    A = build_ps_matrix(beta, t)
    y = find_small_image_vector(A, budget)
    if y[t] < 0:
        y = tuple(-v for v in y)
    m_parts, m = tuple(y[:t]), y[t]
    if m <= 0 or sum(m_parts) != m:
        raise InvariantViolation(f"bad multipliers m={m}, parts={m_parts}")
    verts = [S.vertices[order[i]] for i in range(t)]
    d = S.dimension
    r = tuple(sum((Fraction(mi, m) * v[j] for mi, v in zip(m_parts, verts)), Fraction(0))
              for j in range(d))
    # (m+1) x - m r, kept in integers
    q = tuple((m + 1) * x[j] - sum(mi * v[j] for mi, v in zip(m_parts, verts)) for j in range(d))
    if not is_interior(S, q):
        raise InvariantViolation(f"improved point {q} is not interior")
    old_gamma = beta.min
    new_gamma = barycentric(S, q).min
    if new_gamma <= old_gamma:
        raise InvariantViolation(f"gamma did not increase: {old_gamma} -> {new_gamma}")
    return ImprovementWitness(t, m, m_parts, r, q, old_gamma, new_gamma, x)


def improve_until_stable(
    S: LatticeSimplex, x: Sequence[int], budget: int = DEFAULT_SEARCH_BUDGET,
    max_steps: int = 10_000,
) -> list:
    """Iterate :func:`improve_point`; returns the witnesses of every step.

    The final point (``witnesses[-1].q``, or x itself) satisfies every
    generalized product-sum inequality.
    """
    path = []
    cur = tuple(x)
    for _ in range(max_steps):
        w = improve_point(S, cur, budget)
        if w is None:
            return path
        if path and w.old_gamma != path[-1].new_gamma:
            raise InvariantViolation("improvement chain is inconsistent")
        path.append(w)
        cur = w.q
    raise InvariantViolation(f"no fixed point after {max_steps} steps")
