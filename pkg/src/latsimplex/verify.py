"""Run every checkable property of the library over a seeded corpus and collect
a deterministic pass/fail report."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .bounds import pikhurko_old_bound, thm15a_threshold, theorem12_bound, theorem32_bound
from .corpus import random_corpus
from .exact import format_rational
from .geometry import (
    barycentric,
    check_pikhurko_volume_bound,
    interior_points,
    maxmin_point,
    volume,
)
from .prodsum import check_generalized, check_product_sum, improve_until_stable
from .sylvester import sylvester, sylvester_unit_identity, zpw_simplex, zpw_volume
from .tau import grid_oracle, is_feasible, lemma51_bound, objective, tau_lower_bound

PASS, FAIL = "pass", "fail"

# grid resolution at which the oracle reproduces tau_d exactly
GRID_STEPS = {1: 4, 2: 18, 3: 24}


@dataclass
class VerifyConfig:
    max_dim: int = 4
    seed: int = 0
    corpus_size: int = 100
    coord_bound: int = 6
    zpw_max_k: int = 5
    budget: int = 10**6
    grid_oracle: Callable = grid_oracle


@dataclass(frozen=True)
class CheckRecord:
    name: str
    status: str
    checked: int
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "checked": self.checked,
                "witness": self.witness}


@dataclass
class VerifyAllReport:
    checks: list = field(default_factory=list)
    incomplete: bool = False

    @property
    def checks_run(self) -> int:
        return sum(c.checked for c in self.checks)

    @property
    def status(self) -> str:
        return PASS if all(c.status == PASS for c in self.checks) else FAIL

    @property
    def note(self) -> Optional[str]:
        return "no checks run" if self.checks_run == 0 else None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "incomplete": self.incomplete,
            "note": self.note,
            "checks_run": self.checks_run,
            "checks": [c.to_json() for c in self.checks],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


class _Budget(Exception):
    pass


class _Check:
    """Accumulates one named check; the first failure is kept as witness."""

    def __init__(self, name, runner):
        self.name = name
        self.runner = runner
        self.checked = 0
        self.witness = None

    def __call__(self, ok: bool, **witness):
        self.runner.spend()
        self.checked += 1
        if not ok and self.witness is None:
            self.witness = {k: _jsonable(v) for k, v in witness.items()}

    def record(self) -> CheckRecord:
        return CheckRecord(self.name, FAIL if self.witness else PASS, self.checked, self.witness)


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, int) and not isinstance(v, bool):
        return v
    return str(v) if not isinstance(v, (str, bool, type(None))) else v


class _Runner:
    def __init__(self, budget):
        self.left = budget

    def spend(self):
        if self.left <= 0:
            raise _Budget
        self.left -= 1


def verify_all(config: Optional[VerifyConfig] = None) -> VerifyAllReport:
    cfg = config or VerifyConfig()
    runner = _Runner(cfg.budget)
    report = VerifyAllReport()
    checks = []

    def new(name):
        c = _Check(name, runner)
        checks.append(c)
        return c

    try:
        _run(cfg, new)
    except _Budget:
        report.incomplete = True
    report.checks = [c.record() for c in checks]
    return report


def _run(cfg: VerifyConfig, new) -> None:
    D = cfg.max_dim
    if D < 1:
        return

    c = new("sylvester-recurrence")
    for i in range(1, 13):
        c(sylvester(i + 1) - 1 == sylvester(i) * (sylvester(i) - 1), i=i)
        c(sylvester_unit_identity(i) == 1, ell=i)

    c_cnt = new("zpw-interior-count")
    c_vol = new("zpw-volume")
    for d in range(1, min(D, 4) + 1):
        for k in range(1, cfg.zpw_max_k + 1):
            S = zpw_simplex(d, k)
            n = len(interior_points(S))
            c_cnt(n == k, d=d, k=k, count=n)
            c_vol(volume(S) == zpw_volume(d, k), d=d, k=k, volume=volume(S))

    corpus = random_corpus(cfg.corpus_size, min(D, 3), cfg.seed, cfg.coord_bound)
    c12 = new("volume-bound-every-interior-point")
    c14 = new("product-sum-k1")
    c16 = new("generalized-product-sum-at-maxmin")
    c15a = new("maxmin-gamma-threshold")
    cimp = new("improvement-converges")
    for S in corpus:
        pts = interior_points(S)
        k = len(pts)
        for p in pts:
            chk = check_pikhurko_volume_bound(S, p, k)
            c12(chk.holds, simplex=S.vertices, point=p, volume=chk.volume, bound=chk.bound)
        res = maxmin_point(S, pts)
        c16(check_generalized(res.beta).all_hold, simplex=S.vertices, point=res.point)
        thr = thm15a_threshold(S.dimension)
        c15a(res.gamma >= thr, simplex=S.vertices, gamma=res.gamma, threshold=thr)
        if k == 1:
            c14(check_product_sum(res.beta).all_hold, simplex=S.vertices, point=res.point)
        for p in pts:
            path = improve_until_stable(S, p)
            end = path[-1].q if path else p
            gammas = [w.old_gamma for w in path] + [barycentric(S, end).min]
            ok = (all(a < b for a, b in zip(gammas, gammas[1:]))
                  and check_generalized(barycentric(S, end).sorted_view()[0]).all_hold)
            cimp(ok, simplex=S.vertices, start=p, end=end)

    ctau = new("tau-exact-and-grid")
    for d in range(1, min(D, 3) + 1):
        r = tau_lower_bound(d)
        g = cfg.grid_oracle(d, GRID_STEPS[d])
        feas = r.attaining_beta is not None and is_feasible(r.attaining_beta, d).feasible
        ctau(r.is_exact and feas and g == r.lower_bound
             and objective(r.attaining_beta, d) == r.lower_bound,
             d=d, lower_bound=r.lower_bound, grid=g)

    c51 = new("tau-above-lemma51")
    for d in range(4, min(D, 5) + 1):
        r = tau_lower_bound(d)
        c51(r.lower_bound >= lemma51_bound(d), d=d, lower_bound=r.lower_bound)

    csand = new("bound-sandwich")
    cold = new("improves-old-bound")
    c32 = new("tau-bound-above-zpw")
    for d in range(1, min(D, 8) + 1):
        for k in range(1, 6):
            z, t12 = zpw_volume(d, k), theorem12_bound(d, k)
            csand(z <= t12 <= (d + 1) * z and t12 / z == Fraction(k * (d + 1), k + 1),
                  d=d, k=k, zpw=z, bound=t12)
        if d <= 6:
            # at d = 1 both bounds equal 2
            t12, old = theorem12_bound(d, 1), pikhurko_old_bound(d, 1)
            cold(t12 <= old if d == 1 else t12 < old, d=d, bound=t12, old=old)
        if d <= 4:
            tau = tau_lower_bound(d).lower_bound
            for k in range(1, 6):
                c32(theorem32_bound(d, k, tau) >= zpw_volume(d, k), d=d, k=k, tau=tau)
