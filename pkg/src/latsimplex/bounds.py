"""Closed-form volume bounds for lattice simplices and polytopes with k interior
lattice points, evaluated exactly, plus the report type the CLI prints."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, fields
from fractions import Fraction
from math import factorial
from typing import Optional

from .errors import DomainError
from .exact import format_rational, int_to_str, parse_rational, str_to_int
from .sylvester import sylvester, zpw_volume

# Exponent of 15 above which the old simplex bound is only rendered as log10.
MAX_EXACT_EXPONENT = 10**6
# Largest d for which (d(2d+1)(s_{2d+1}-1))^d is expanded exactly.
MAX_EXACT_POLYTOPE_DIM = 8

SCOTT_S21 = Fraction(9, 2)
PIKHURKO_D3_FACTOR = Fraction(14106, 1000)


def _check(d: int, k: int) -> None:
    if d < 1 or k < 1:
        raise DomainError(f"need d >= 1 and k >= 1, got d={d}, k={k}")


def log10_string(x) -> str:
    """log10 of a positive exact number, 6 significant digits."""
    x = Fraction(x)
    if x <= 0:
        raise DomainError("log10 of a non-positive number")
    return f"{math.log10(x.numerator) - math.log10(x.denominator):.6g}"


def theorem12_bound(d: int, k: int) -> Fraction:
    """k (d+1) (s_d - 1)^2 / d!"""
    _check(d, k)
    return Fraction(k * (d + 1) * (sylvester(d) - 1) ** 2, factorial(d))


def theorem32_bound(d: int, k: int, tau_lower) -> Fraction:
    """k / (d! tau); an upper bound on s(d, k) whenever tau <= tau_d."""
    _check(d, k)
    tau_lower = Fraction(tau_lower)
    if tau_lower <= 0:
        raise DomainError("tau lower bound must be positive")
    return Fraction(k, factorial(d)) / tau_lower


def _pikhurko_exponent(d: int) -> int:
    return (d - 1) * 2 ** (d + 1)


def pikhurko_old_bound(d: int, k: int) -> Fraction:
    """k 2^(3d-2) 15^((d-1) 2^(d+1)) / d!, exact."""
    _check(d, k)
    e = _pikhurko_exponent(d)
    if e > MAX_EXACT_EXPONENT:
        raise DomainError(f"15^{e} is too large to expand; use pikhurko_old_bound_log10")
    return Fraction(k * 2 ** (3 * d - 2) * 15 ** e, factorial(d))


def pikhurko_old_bound_log10(d: int, k: int) -> str:
    _check(d, k)
    v = (math.log10(k) + (3 * d - 2) * math.log10(2)
         + _pikhurko_exponent(d) * math.log10(15) - math.log10(factorial(d)))
    return f"{v:.6g}"


def thm15a_threshold(d: int) -> Fraction:
    """1 / ((d+1)(s_{d+1} - 1)): some interior lattice point has all
    barycentric coordinates at least this large."""
    if d < 1:
        raise DomainError("d must be >= 1")
    return Fraction(1, (d + 1) * (sylvester(d + 1) - 1))


def thm15b_bound(d: int, k: int) -> int:
    """(d (2d+1) (s_{2d+1} - 1))^d k, an upper bound on p(d, k)."""
    _check(d, k)
    return (d * (2 * d + 1) * (sylvester(2 * d + 1) - 1)) ** d * k


def _log10_sylvester_minus_one(n: int) -> float:
    # s_{i+1} - 1 = s_i (s_i - 1); switch to floats once the terms get long
    if n <= 12:
        return math.log10(sylvester(n) - 1)
    a = sylvester(12)
    la, lam1 = math.log10(a), math.log10(a - 1)
    for _ in range(12, n):
        lam1 = la + lam1
        la = lam1  # s_{i+1} = (s_{i+1} - 1) + 1, indistinguishable at this size
    return lam1


def thm15b_bound_log10(d: int, k: int) -> str:
    _check(d, k)
    v = math.log10(k) + d * (math.log10(d * (2 * d + 1)) + _log10_sylvester_minus_one(2 * d + 1))
    return f"{v:.6g}"


def literature_values(d: int, k: int) -> dict:
    """Published values for small d, labeled and never recomputed."""
    _check(d, k)
    if d == 2:
        v = SCOTT_S21 if k == 1 else Fraction(2 * (k + 1))
        return {"s(2,k) [Scott 1976]": format_rational(v)}
    if d == 3:
        return {"s(3,k) <= 14.106k [Pikhurko 2001]": format_rational(PIKHURKO_D3_FACTOR * k)}
    return {}


@dataclass(frozen=True)
class BoundsReport:
    d: int
    k: int
    zpw_volume: Fraction
    thm12_bound: Fraction
    ratio_thm12_over_zpw: Fraction
    tau_lower: Optional[Fraction]
    thm32_bound: Optional[Fraction]
    pikhurko_old_bound: Optional[Fraction]
    pikhurko_old_log10: str
    pikhurko_old_exact: bool
    thm15a_threshold: Fraction
    thm15b_bound: Optional[int]
    thm15b_log10: str
    thm15b_exact: bool
    literature: dict

    def to_json(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, Fraction):
                v = format_rational(v)
            elif isinstance(v, int) and not isinstance(v, bool) and f.name not in ("d", "k"):
                v = int_to_str(v)
            out[f.name] = v
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, data) -> "BoundsReport":
        if isinstance(data, str):
            data = json.loads(data)

        def frac(v):
            return None if v is None else parse_rational(v)

        return cls(
            d=int(data["d"]),
            k=int(data["k"]),
            zpw_volume=parse_rational(data["zpw_volume"]),
            thm12_bound=parse_rational(data["thm12_bound"]),
            ratio_thm12_over_zpw=parse_rational(data["ratio_thm12_over_zpw"]),
            tau_lower=frac(data["tau_lower"]),
            thm32_bound=frac(data["thm32_bound"]),
            pikhurko_old_bound=frac(data["pikhurko_old_bound"]),
            pikhurko_old_log10=data["pikhurko_old_log10"],
            pikhurko_old_exact=bool(data["pikhurko_old_exact"]),
            thm15a_threshold=parse_rational(data["thm15a_threshold"]),
            thm15b_bound=None if data["thm15b_bound"] is None else str_to_int(data["thm15b_bound"]),
            thm15b_log10=data["thm15b_log10"],
            thm15b_exact=bool(data["thm15b_exact"]),
            literature=dict(data["literature"]),
        )

    def to_csv(self) -> str:
        row = self.to_json()
        row["literature"] = json.dumps(row["literature"], sort_keys=True)
        row = {k: ("" if v is None else v) for k, v in row.items()}
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
        w.writeheader()
        w.writerow(row)
        return buf.getvalue()


def bounds_report(d: int, k: int, tau_max_dim: int = 8, tolerance=None) -> BoundsReport:
    from .tau import DEFAULT_TOLERANCE, tau_lower_bound

    _check(d, k)
    zv = zpw_volume(d, k)
    t12 = theorem12_bound(d, k)
    tau = None
    t32 = None
    if d <= tau_max_dim:
        tau = tau_lower_bound(d, tolerance or DEFAULT_TOLERANCE).lower_bound
        t32 = theorem32_bound(d, k, tau)
    exact_old = _pikhurko_exponent(d) <= MAX_EXACT_EXPONENT
    old = pikhurko_old_bound(d, k) if exact_old else None
    exact_15b = d <= MAX_EXACT_POLYTOPE_DIM
    b15 = thm15b_bound(d, k) if exact_15b else None
    return BoundsReport(
        d=d, k=k,
        zpw_volume=zv,
        thm12_bound=t12,
        ratio_thm12_over_zpw=t12 / zv,
        tau_lower=tau,
        thm32_bound=t32,
        pikhurko_old_bound=old,
        pikhurko_old_log10=log10_string(old) if exact_old else pikhurko_old_bound_log10(d, k),
        pikhurko_old_exact=exact_old,
        thm15a_threshold=thm15a_threshold(d),
        thm15b_bound=b15,
        thm15b_log10=log10_string(b15) if exact_15b else thm15b_bound_log10(d, k),
        thm15b_exact=exact_15b,
        literature=literature_values(d, k),
    )
