"""Sylvester's sequence 2, 3, 7, 43, 1807, ... and the Zaks-Perles-Wills simplices."""
from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial, prod

from .errors import DomainError


class SylvesterCache:
    """Lazily extended memo of the sequence; ``values[i]`` holds s_{i+1}.

    Extension is guarded by a lock so one cache can be shared across threads.
    """

    def __init__(self):
        self._values = [2]
        self._product = 2  # s_1 * ... * s_n for n = len(values)
        self._lock = threading.Lock()

    @property
    def values(self) -> tuple:
        return tuple(self._values)

    def __len__(self):
        return len(self._values)

    def get(self, i: int) -> int:
        if i < 1:
            raise DomainError(f"Sylvester index must be >= 1, got {i}")
        if i > len(self._values):
            with self._lock:
                while len(self._values) < i:
                    nxt = self._product + 1
                    self._values.append(nxt)
                    self._product *= nxt
        return self._values[i - 1]


_CACHE = SylvesterCache()


def sylvester(i: int) -> int:
    """The i-th term s_i (1-based), exact."""
    return _CACHE.get(i)


def sylvester_list(n: int) -> list:
    """[s_1, ..., s_n]."""
    return [sylvester(i) for i in range(1, n + 1)]


def sylvester_unit_identity(ell: int) -> Fraction:
    """Sum of 1/s_i for i <= ell plus 1/(s_1 ... s_ell); always exactly 1."""
    if ell < 1:
        raise DomainError("ell must be >= 1")
    terms = sylvester_list(ell)
    return sum((Fraction(1, s) for s in terms), Fraction(0)) + Fraction(1, prod(terms))


def _check_dk(d: int, k: int) -> None:
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    if k < 1:
        raise DomainError(f"interior point count must be >= 1, got {k}")


def zpw_vertices(d: int, k: int) -> list:
    """Vertices o, s_1 e_1, ..., s_{d-1} e_{d-1}, (k+1)(s_d - 1) e_d."""
    _check_dk(d, k)
    verts = [[0] * d]
    for i in range(1, d + 1):
        v = [0] * d
        v[i - 1] = sylvester(i) if i < d else (k + 1) * (sylvester(d) - 1)
        verts.append(v)
    return verts


def zpw_simplex(d: int, k: int):
    from .geometry import LatticeSimplex

    return LatticeSimplex(zpw_vertices(d, k))


def zpw_volume(d: int, k: int) -> Fraction:
    """(k+1)(s_d - 1)^2 / d!"""
    _check_dk(d, k)
    return Fraction((k + 1) * (sylvester(d) - 1) ** 2, factorial(d))
