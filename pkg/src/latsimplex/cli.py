"""Command-line front end.  Every subcommand prints deterministic JSON
(sorted keys, rationals as "p/q" strings, big integers as decimal strings)."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from .bounds import bounds_report
from .errors import LatSimplexError
from .exact import format_rational, int_to_str, parse_rational
from .geometry import LatticeSimplex, barycentric, interior_points, maxmin_point
from .prodsum import check_generalized, check_product_sum, improve_point
from .sylvester import sylvester_list, zpw_simplex
from .tau import DEFAULT_TOLERANCE, grid_search, tau_lower_bound
from .verify import VerifyConfig, verify_all

log = logging.getLogger("latsimplex")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _load_simplex(path: str) -> LatticeSimplex:
    with open(path) as fh:
        return LatticeSimplex.from_json(json.load(fh))


def _parse_point(text: str) -> tuple:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"point must be comma-separated integers: {text!r}")


def cmd_sylvester(args) -> int:
    _emit([int_to_str(s) for s in sylvester_list(args.upto)])
    return 0


def cmd_zpw(args) -> int:
    S = zpw_simplex(args.dim, args.k)
    out = S.to_json()
    if args.verify:
        n = len(interior_points(S))
        out["interior_point_count"] = n
        if n != args.k:
            _emit(out)
            print(f"error: expected {args.k} interior points, found {n}", file=sys.stderr)
            return 1
    _emit(out)
    return 0


def cmd_enumerate(args) -> int:
    _emit([list(p) for p in interior_points(_load_simplex(args.simplex))])
    return 0


def cmd_check_ps(args) -> int:
    S = _load_simplex(args.simplex)
    point = args.point if args.point is not None else maxmin_point(S).point
    beta, order = barycentric(S, point).sorted_view()
    _emit({
        "point": list(point),
        "beta_sorted": beta.to_json(),
        "vertex_order": list(order),
        "product_sum": check_product_sum(beta).to_json(),
        "generalized": check_generalized(beta).to_json(),
    })
    return 0


def cmd_improve(args) -> int:
    S = _load_simplex(args.simplex)
    w = improve_point(S, args.point)
    if w is None:
        _emit({"status": "already-satisfies", "point": list(args.point)})
    else:
        _emit({"status": "improved", **w.to_json()})
    return 0


def cmd_tau(args) -> int:
    res = tau_lower_bound(args.dim, args.tolerance)
    out = res.to_json()
    if args.grid is not None:
        g = grid_search(args.dim, args.grid)
        out["grid_steps"] = args.grid
        out["grid_upper"] = None if g.value is None else format_rational(g.value)
        out["grid_beta"] = None if g.beta is None else [format_rational(x) for x in g.beta]
    _emit(out)
    return 0


def cmd_bounds(args) -> int:
    rep = bounds_report(args.dim, args.k)
    if args.format == "csv":
        sys.stdout.write(rep.to_csv())
    else:
        _emit(rep.to_json())
    return 0


def cmd_verify_all(args) -> int:
    cfg = VerifyConfig(max_dim=args.max_dim, seed=args.seed, budget=args.budget,
                       corpus_size=args.corpus_size)
    rep = verify_all(cfg)
    _emit(rep.to_json())
    return 0 if rep.status == "pass" else 1


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _tolerance(text: str) -> Fraction:
    v = parse_rational(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latsimplex", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sylvester", help="terms s_1..s_N of Sylvester's sequence")
    s.add_argument("--upto", type=_positive, required=True)
    s.set_defaults(func=cmd_sylvester)

    s = sub.add_parser("zpw", help="the Zaks-Perles-Wills simplex S_{d,k}")
    s.add_argument("--dim", type=_positive, required=True)
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--verify", action="store_true", help="count interior points")
    s.set_defaults(func=cmd_zpw)

    s = sub.add_parser("enumerate", help="interior lattice points of a simplex")
    s.add_argument("--simplex", required=True, metavar="FILE")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("check-ps", help="product-sum inequalities at a point")
    s.add_argument("--simplex", required=True, metavar="FILE")
    s.add_argument("--point", type=_parse_point, default=None,
                   help="defaults to the max-min interior point")
    s.set_defaults(func=cmd_check_ps)

    s = sub.add_parser("improve", help="one interior-point improvement step")
    s.add_argument("--simplex", required=True, metavar="FILE")
    s.add_argument("--point", type=_parse_point, required=True)
    s.set_defaults(func=cmd_improve)

    s = sub.add_parser("tau", help="certified lower bound on tau_d")
    s.add_argument("--dim", type=_positive, required=True)
    s.add_argument("--tolerance", type=_tolerance, default=DEFAULT_TOLERANCE, metavar="P/Q")
    s.add_argument("--grid", type=_positive, default=None, metavar="N",
                   help="also report the grid-search upper envelope at resolution 1/N")
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("bounds", help="all volume bounds for (d, k)")
    s.add_argument("--dim", type=_positive, required=True)
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify-all", help="run the full property suite")
    s.add_argument("--max-dim", type=int, default=4)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=10**6)
    s.add_argument("--corpus-size", type=int, default=100)
    s.set_defaults(func=cmd_verify_all)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("LATSIMPLEX_LOG", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    log.debug("running %s", args.command)
    try:
        return args.func(args)
    except (LatSimplexError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
