"""Command-line front end.

Exit codes: 0 success, 1 verification or certification failure, 2
malformed input.  Payloads keep every number as an exact rational string;
--decimal adds approximate values alongside for human reading.
"""

from __future__ import annotations

import argparse
import json
import sys

from gmpy2 import mpq

from . import certifier
from .packings import (
    CONSTRUCTION_NAMES,
    PackingSet,
    construct,
    critical_radius,
    verify_packing,
)
from .rational import RInterval, format_rat, parse_rat
from .regions import SIGNS, eval_points, region_vertices
from .search import SearchConfig, run_search


class CliError(Exception):
    def __init__(self, message: str, exit_code: int = 2):
        super().__init__(message)
        self.exit_code = exit_code


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # structured errors instead of usage text
        raise CliError(message)


def _load_packing(path: str) -> PackingSet:
    try:
        with open(path) as fh:
            obj = json.load(fh)
        return PackingSet.from_json(obj)
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError) as e:
        raise CliError(f"cannot read packing set from {path}: {e}")


def _parse_radius(s: str):
    try:
        r = parse_rat(s)
    except ValueError as e:
        raise CliError(f"malformed rational {s!r}: {e}")
    if r <= 0:
        raise CliError(f"radius must be positive, got {s}")
    return r


def _parse_interval(s: str) -> RInterval:
    try:
        return RInterval.parse(s)
    except ValueError as e:
        raise CliError(str(e))


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_construct(args) -> int:
    try:
        P = construct(args.name, args.n)
    except ValueError as e:
        raise CliError(str(e))
    _emit(P.to_json())
    return 0


def _cmd_verify(args) -> int:
    P = _load_packing(args.input)
    report = verify_packing(P, _parse_radius(args.r))
    payload = report.to_json()
    if args.decimal:
        payload["min_pairwise_approx"] = float(mpq(payload["min_pairwise"]))
    _emit(payload)
    return 0 if report.ok() else 1


def _cmd_radius(args) -> int:
    P = _load_packing(args.input)
    try:
        r = critical_radius(P)
    except ValueError as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 1
    line = format_rat(r)
    if args.decimal:
        line += f" ~ {float(r):.6f}"
    print(line)
    return 0


def _cmd_bound(args) -> int:
    I = _parse_interval(args.interval)
    try:
        cert = certifier.gamma_upper_bound(I, args.n)
    except certifier.CertificationError as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 1
    _emit(cert.to_json())
    return 0


def _cmd_certify_lemma(args) -> int:
    needs_r = args.id in ("capture", "decomposition")
    if needs_r and args.r is None:
        raise CliError(f"--r is required for --id {args.id}")
    if not needs_r and args.interval is None:
        raise CliError(f"--interval is required for --id {args.id}")
    try:
        if args.id == "capture":
            ok, ev = certifier.vertex_capture_check(args.n, _parse_radius(args.r))
            payload = {"id": args.id, "ok": ok, "evidence": ev}
        elif args.id == "decomposition":
            ok, ev = certifier.decomposition_check(_parse_radius(args.r))
            payload = {"id": args.id, "ok": ok, "evidence": ev}
        elif args.id == "blocking-a":
            table = certifier.build_block_table(
                _parse_interval(args.interval), "whole_region"
            )
            ok = len(table.entries) == 24
            payload = {"id": args.id, "ok": ok, "evidence": table.to_json()}
        elif args.id == "blocking-b":
            table = certifier.build_block_table(
                _parse_interval(args.interval), "per_subcell"
            )
            ok = len(table.entries) == 24
            payload = {"id": args.id, "ok": ok, "evidence": table.to_json()}
        else:  # diameter
            ev = certifier.region_diameter_check(_parse_interval(args.interval))
            ok = ev["always_less"]
            payload = {"id": args.id, "ok": ok, "evidence": ev}
    except (certifier.CertificationError, ValueError) as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 1
    _emit(payload)
    return 0 if payload["ok"] else 1


def _cmd_frontier(args) -> int:
    P = _load_packing(args.input)
    try:
        report = certifier.frontier_analysis(P, _parse_radius(args.r))
    except ValueError as e:
        raise CliError(str(e))
    if args.decimal:
        for entry in report["regions"]:
            if "vertex_distances" in entry:
                entry["vertex_distances_approx"] = [
                    float(mpq(d)) for d in entry["vertex_distances"]
                ]
    _emit(report)
    return 0


def _cmd_search(args) -> int:
    try:
        cfg = SearchConfig(
            dim=args.dim,
            k=args.k,
            restarts=args.restarts,
            max_iters=args.iters,
            seed=args.seed,
            denominator_bound=args.denoms,
        )
    except ValueError as e:
        raise CliError(str(e))
    result = run_search(cfg)
    _emit(result.to_json())
    return 0


# the gamma summary for dimension 3; lower == upper means the value is
# exact, the half-radius row is cited from the literature
_TABLE_ROWS = (
    ("(1,oo)", "1", "1", "exact", "exact"),
    ("(2/3,1]", "6", "6", "exact", "exact"),
    ("(3/5,2/3]", "10", "10", "exact", "exact"),
    ("(4/7,3/5]", "12", "12", "exact", "exact"),
    ("(6/11,4/7]", "12", "14", "lower", "upper"),
    ("(1/2,6/11]", "13", "14", "lower", "upper"),
    ("[1/2,1/2]", "19", "26", "cited", "cited"),
)


def _cmd_table(args) -> int:
    rows = [
        {
            "interval": iv,
            "lower": lo,
            "upper": hi,
            "lower_kind": lk,
            "upper_kind": hk,
        }
        for iv, lo, hi, lk, hk in _TABLE_ROWS
    ]
    if args.format == "csv":
        lines = ["interval,lower,upper,lower_kind,upper_kind"]
        for row in rows:
            lines.append(
                f"\"{row['interval']}\",{row['lower']},{row['upper']},"
                f"{row['lower_kind']},{row['upper_kind']}"
            )
        print("\n".join(lines))
    else:
        _emit({"dim": 3, "rows": rows})
    return 0


def _cmd_emit_figure(args) -> int:
    try:
        P = construct(args.config, 3)
    except ValueError as e:
        raise CliError(str(e))
    r = _parse_radius(args.r)
    regions = []
    if mpq(1, 2) <= r <= 1:
        for sign in SIGNS:
            verts = eval_points(region_vertices(sign), r)
            regions.append(
                {
                    "sign": list(sign),
                    "vertices": [[format_rat(c) for c in p] for p in verts],
                }
            )
    payload = {
        "config": args.config,
        "r": format_rat(r),
        "ball_radius": format_rat(r),
        "ball_centers": [[format_rat(c) for c in p] for p in P.points],
        "body_vertices": [
            [format_rat(mpq(s) if i == j else mpq(0)) for i in range(3)]
            for j in range(3)
            for s in (1, -1)
        ],
        "regions": regions,
    }
    _emit(payload)
    return 0


# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    p = _Parser(prog="crosspack", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a named configuration")
    c.add_argument("--name", required=True, choices=CONSTRUCTION_NAMES)
    c.add_argument("--n", type=int, default=3)
    c.set_defaults(func=_cmd_construct)

    c = sub.add_parser("verify", help="check a packing set at a radius")
    c.add_argument("--input", required=True)
    c.add_argument("--r", required=True)
    c.add_argument("--decimal", action="store_true")
    c.set_defaults(func=_cmd_verify)

    c = sub.add_parser("radius", help="exact critical radius of a set")
    c.add_argument("--input", required=True)
    c.add_argument("--decimal", action="store_true")
    c.set_defaults(func=_cmd_radius)

    c = sub.add_parser("bound", help="certify an upper bound over an interval")
    c.add_argument("--interval", required=True)
    c.add_argument("--n", type=int, default=3)
    c.set_defaults(func=_cmd_bound)

    c = sub.add_parser("certify-lemma", help="emit one lemma's evidence")
    c.add_argument(
        "--id",
        required=True,
        choices=("capture", "decomposition", "blocking-a", "blocking-b", "diameter"),
    )
    c.add_argument("--r")
    c.add_argument("--interval")
    c.add_argument("--n", type=int, default=3)
    c.set_defaults(func=_cmd_certify_lemma)

    c = sub.add_parser("frontier", help="region occupancy report for a set")
    c.add_argument("--input", required=True)
    c.add_argument("--r", required=True)
    c.add_argument("--decimal", action="store_true")
    c.set_defaults(func=_cmd_frontier)

    c = sub.add_parser("search", help="stochastic maximin dispersion search")
    c.add_argument("--dim", type=int, default=3)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--restarts", type=int, default=32)
    c.add_argument("--iters", type=int, default=4000)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--denoms", type=int, default=12)
    c.set_defaults(func=_cmd_search)

    c = sub.add_parser("table", help="the gamma summary table")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--decimal", action="store_true")
    c.set_defaults(func=_cmd_table)

    c = sub.add_parser("emit-figure", help="geometry data for external plotting")
    c.add_argument("--config", required=True, choices=CONSTRUCTION_NAMES)
    c.add_argument("--r", required=True)
    c.set_defaults(func=_cmd_emit_figure)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return e.exit_code
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
