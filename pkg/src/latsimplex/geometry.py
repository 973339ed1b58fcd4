"""Lattice simplices: barycentric coordinates, volume, interior lattice points."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import NamedTuple, Optional, Sequence

from .errors import (
    BudgetError,
    DegenerateError,
    DimensionError,
    DomainError,
    EmptyInteriorError,
)
from .exact import RationalMatrix, as_rational, format_rational, integer_det, inverse

DEFAULT_CELL_BUDGET = 10**8


class LatticeSimplex:
    """A full-dimensional simplex with integer vertices in Z^d.

    Vertex order is kept as given; barycentric coordinates refer to it.
    """

    __slots__ = ("vertices", "dimension", "_det", "_forms")

    def __init__(self, vertices: Sequence[Sequence[int]]):
        verts = tuple(tuple(int(c) for c in v) for v in vertices)
        if not verts:
            raise DimensionError("a simplex needs at least one vertex")
        d = len(verts) - 1
        if d < 1:
            raise DimensionError("a simplex needs dimension >= 1")
        if any(len(v) != d for v in verts):
            raise DimensionError(f"{d + 1} vertices must each have {d} coordinates")
        v0 = verts[0]
        # columns are v_i - v_0
        cols = [[verts[c + 1][r] - v0[r] for c in range(d)] for r in range(d)]
        D = integer_det(cols)
        if D == 0:
            raise DegenerateError("vertices are affinely dependent")
        adj = inverse(RationalMatrix.from_rows(cols))
        adj_int = [[int(adj[i, j] * D) for j in range(d)] for i in range(d)]
        if D < 0:
            D = -D
            adj_int = [[-a for a in row] for row in adj_int]
        # Barycentric numerators (over D) are affine forms in x:
        #   N_i(x) = adj_i . (x - v0)           for vertex i >= 1
        #   N_0(x) = D - sum_i N_i(x)
        forms = []
        colsum = [sum(adj_int[i][j] for i in range(d)) for j in range(d)]
        forms.append((D + sum(colsum[j] * v0[j] for j in range(d)), [-c for c in colsum]))
        for i in range(d):
            row = adj_int[i]
            forms.append((-sum(row[j] * v0[j] for j in range(d)), list(row)))
        self.vertices = verts
        self.dimension = d
        self._det = D
        self._forms = forms

    def __repr__(self):
        return f"LatticeSimplex({[list(v) for v in self.vertices]})"

    def __eq__(self, other):
        return isinstance(other, LatticeSimplex) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def normalized_volume(self) -> int:
        """d! times the Euclidean volume, i.e. |det(v_2 - v_1, ..., v_{d+1} - v_1)|."""
        return self._det

    def barycentric_numerators(self, x: Sequence[int]) -> list:
        """Integer numerators of the barycentric coordinates of a lattice point;
        the common denominator is :attr:`normalized_volume`."""
        return [c + sum(w * xi for w, xi in zip(ws, x)) for c, ws in self._forms]

    def bounding_box(self) -> list:
        d = self.dimension
        return [
            (min(v[j] for v in self.vertices), max(v[j] for v in self.vertices))
            for j in range(d)
        ]

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "vertices": [list(v) for v in self.vertices]}

    @classmethod
    def from_json(cls, data) -> "LatticeSimplex":
        if isinstance(data, str):
            data = json.loads(data)
        S = cls(data["vertices"])
        if "dimension" in data and int(data["dimension"]) != S.dimension:
            raise DimensionError(
                f"declared dimension {data['dimension']} but vertices span {S.dimension}"
            )
        return S


@dataclass(frozen=True)
class BetaVector:
    """Barycentric-style coordinate vector; entries sum to exactly 1."""

    entries: tuple
    is_sorted: bool = False

    def __post_init__(self):
        e = tuple(as_rational(x) for x in self.entries)
        object.__setattr__(self, "entries", e)
        if sum(e, Fraction(0)) != 1:
            raise DomainError(f"entries sum to {sum(e, Fraction(0))}, not 1")
        if self.is_sorted and any(e[i] < e[i + 1] for i in range(len(e) - 1)):
            raise DomainError("entries flagged sorted are not descending")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def min(self) -> Fraction:
        return min(self.entries)

    def sorted_view(self):
        """Descending copy and the permutation used.

        ``perm[i]`` is the original index of the i-th largest entry; the sort
        is stable, so equal entries keep vertex order.
        """
        perm = tuple(sorted(range(len(self.entries)), key=lambda i: -self.entries[i]))
        return BetaVector(tuple(self.entries[i] for i in perm), True), perm

    def to_json(self) -> list:
        return [format_rational(x) for x in self.entries]


@dataclass(frozen=True)
class MaxMinResult:
    point: tuple
    beta: BetaVector  # sorted descending
    gamma: Fraction
    order: tuple  # vertex index carrying each sorted coordinate

    def __post_init__(self):
        if self.gamma != self.beta.min or self.gamma <= 0:
            raise DomainError("gamma must equal the positive minimum coordinate")


class VolumeBoundCheck(NamedTuple):
    volume: Fraction
    bound: Fraction
    holds: bool


def _as_point(S: LatticeSimplex, x) -> tuple:
    x = tuple(x)
    if len(x) != S.dimension:
        raise DimensionError(f"point has {len(x)} coordinates, simplex dimension {S.dimension}")
    return x


def barycentric(S: LatticeSimplex, x: Sequence) -> BetaVector:
    """Exact barycentric coordinates of a rational point, in vertex order."""
    x = tuple(as_rational(c) for c in _as_point(S, x))
    D = S.normalized_volume
    return BetaVector(tuple(
        (c + sum((w * xi for w, xi in zip(ws, x)), Fraction(0))) / D
        for c, ws in S._forms
    ))


def volume(S: LatticeSimplex) -> Fraction:
    return Fraction(S.normalized_volume, factorial(S.dimension))


def is_interior(S: LatticeSimplex, x: Sequence[int]) -> bool:
    return all(n > 0 for n in S.barycentric_numerators(_as_point(S, x)))


def _box_cells(box) -> int:
    return prod(hi - lo + 1 for lo, hi in box)


def interior_points(S: LatticeSimplex, cell_budget: int = DEFAULT_CELL_BUDGET) -> list:
    """All lattice points with strictly positive barycentric coordinates,
    sorted lexicographically.

    The vertex bounding box is scanned over its first d-1 axes; along the last
    axis the admissible integer range is solved exactly from the d+1 linear
    sign conditions.
    """
    box = S.bounding_box()
    cells = _box_cells(box)
    if cells > cell_budget:
        raise BudgetError(f"bounding box has {cells} cells, budget is {cell_budget}")
    d = S.dimension
    last_lo, last_hi = box[-1]
    out = []
    for head in itertools.product(*(range(lo, hi + 1) for lo, hi in box[:-1])):
        lo, hi = last_lo, last_hi
        for c, ws in S._forms:
            base = c + sum(w * xi for w, xi in zip(ws, head))
            w = ws[d - 1]
            # need base + w * y > 0
            if w == 0:
                if base <= 0:
                    lo, hi = 1, 0
                    break
            elif w > 0:
                lo = max(lo, (-base) // w + 1)
            else:
                hi = min(hi, (base - 1) // (-w))
            if lo > hi:
                break
        for y in range(lo, hi + 1):
            out.append(head + (y,))
    return out


def count_interior_points(S: LatticeSimplex, cell_budget: int = DEFAULT_CELL_BUDGET) -> int:
    return len(interior_points(S, cell_budget))


def maxmin_point(S: LatticeSimplex, points: Optional[list] = None) -> MaxMinResult:
    """Interior lattice point whose smallest barycentric coordinate is largest.

    Ties go to the lexicographically smallest point.
    """
    if points is None:
        points = interior_points(S)
    best = None
    best_min = None
    for p in points:
        m = min(S.barycentric_numerators(p))
        if best_min is None or m > best_min:
            best, best_min = p, m
    if best is None or best_min <= 0:
        raise EmptyInteriorError(f"{S!r} has no interior lattice point")
    beta, order = barycentric(S, best).sorted_view()
    return MaxMinResult(tuple(best), beta, beta.min, order)


def check_pikhurko_volume_bound(
    S: LatticeSimplex, x: Sequence[int], k: Optional[int] = None
) -> VolumeBoundCheck:
    """Compare vol(S) with k / (d! * beta_1 ... beta_d) for sorted coordinates of x."""
    x = _as_point(S, x)
    if not is_interior(S, x):
        raise DomainError(f"{x} is not an interior lattice point")
    if k is None:
        k = count_interior_points(S)
    beta, _ = barycentric(S, x).sorted_view()
    d = S.dimension
    bound = Fraction(k, factorial(d)) / prod(beta.entries[:d])
    vol = volume(S)
    return VolumeBoundCheck(vol, bound, vol <= bound)
