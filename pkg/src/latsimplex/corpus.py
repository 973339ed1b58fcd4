"""Seeded random lattice simplices used by the verification harness and tests."""
from __future__ import annotations

import random
from typing import Optional

from .errors import DegenerateError
from .geometry import LatticeSimplex, interior_points


def random_simplex(
    rng: random.Random, d: int, coord_bound: int = 6, require_interior: bool = True,
    max_normalized_volume: Optional[int] = None,
) -> LatticeSimplex:
    """Draw vertices uniformly from [-coord_bound, coord_bound]^d until the
    simplex is full-dimensional (and has an interior lattice point, if asked)."""
    while True:
        verts = [[rng.randint(-coord_bound, coord_bound) for _ in range(d)] for _ in range(d + 1)]
        try:
            S = LatticeSimplex(verts)
        except DegenerateError:
            continue
        if max_normalized_volume is not None and S.normalized_volume > max_normalized_volume:
            continue
        if require_interior and not interior_points(S):
            continue
        return S


def random_corpus(
    size: int, max_dim: int = 3, seed: int = 0, coord_bound: int = 6,
    max_normalized_volume: Optional[int] = None,
) -> list:
    """``size`` simplices with nonempty interior; dimensions cycle through 1..max_dim."""
    rng = random.Random(seed)
    return [
        random_simplex(rng, 1 + i % max_dim, coord_bound,
                       max_normalized_volume=max_normalized_volume)
        for i in range(size)
    ]
