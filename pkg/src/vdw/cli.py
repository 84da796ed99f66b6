"""Command-line interface: compute, formula, verify, check.

Exit codes: 0 success; 1 usage or input error; 2 node budget exhausted;
3 verification failure (a failing dataset entry, or an invalid coloring
passed to check).

Every subcommand accepts --json, which emits a single structured document
on stdout.  Documents carry schema_version and are byte-stable across
identical invocations except for the stats timings.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certs import DatasetFormatError, load_dataset, verify_dataset
from .core import (ColoringSyntaxError, Instance, InvalidInstance,
                   format_coloring, parse_coloring)
from .formula import (EXACT, HypothesisViolated, RangeTooLarge,
                      extremal_coloring, w2_formula)
from .search import SearchConfig, compute_w
from .validity import ColorOutOfRange, find_violation

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3


def _instance_from(text: str) -> Instance:
    try:
        ks = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise InvalidInstance(f"--k wants comma-separated integers, got {text!r}")
    if not ks:
        raise InvalidInstance("--k is empty")
    return Instance.of(*ks)


def _emit(doc: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))


def _status_word(exact: bool) -> str:
    return "exact" if exact else "lower-bound"


def cmd_compute(args: argparse.Namespace) -> int:
    inst = _instance_from(args.k)
    cfg = SearchConfig(enumerate_all=args.enumerate, node_budget=args.budget,
                       parallel=args.parallel)
    out = compute_w(inst, cfg)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "compute",
        "instance": list(inst.k),
        "w": out.w,
        "status": _status_word(out.exhaustive),
        "stats": {"nodes_explored": out.nodes_explored,
                  "elapsed_ms": round(out.elapsed * 1000)},
    }
    lines = [f"w{inst} = {out.w}" if out.exhaustive else f"w{inst} >= {out.w}",
             f"status: {doc['status']}  nodes: {out.nodes_explored}  "
             f"elapsed: {out.elapsed:.3f}s"]
    if out.certificates is not None:
        doc["certificates"] = [format_coloring(c, compact=True)
                               for c in out.certificates]
        lines.append(f"maximal valid colorings ({len(out.certificates)}):")
        lines.extend(f"  {s}" for s in doc["certificates"])
    _emit(doc, args.json, lines)
    return EXIT_OK if out.exhaustive else EXIT_BUDGET


def cmd_formula(args: argparse.Namespace) -> int:
    res = w2_formula(args.k, args.r)
    inst = Instance.of(args.k, *([2] * (args.r - 1)))
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "formula",
        "instance": list(inst.k),
        "k": args.k,
        "r": args.r,
        "w": res.value,
        "status": "exact" if res.status == EXACT else "lower-bound",
        "case": res.case,
        "j": res.j,
        "l": res.l,
        "m": res.m,
        "search_confirmed": res.search_confirmed,
    }
    rel = "=" if res.status == EXACT else ">="
    lines = [f"w2({args.k};{args.r}) {rel} {res.value}",
             f"case {res.case}  j={res.j}  l={res.l}  m={res.m}"
             + ("  (search confirms this value is exact)" if res.search_confirmed
                else "")]
    if args.witness:
        c = extremal_coloring(args.k, args.r)
        doc["certificates"] = [format_coloring(c, compact=True)]
        lines.append(f"witness ({len(c)} positions): "
                     f"{format_coloring(c, compact=True)}")
    _emit(doc, args.json, lines)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    ds = load_dataset(args.data)
    report = verify_dataset(ds)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "dataset": args.data if args.data else "embedded",
        "ok": report.ok,
        "entries": [
            {
                "instance": list(e.instance.k),
                "w": e.w,
                "expected_total": e.expected_total,
                "actual_total": e.actual_total,
                "ok": e.ok,
                "failures": list(e.failures),
            }
            for e in report.entries
        ],
    }
    _emit(doc, args.json, [str(report)])
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_check(args: argparse.Namespace) -> int:
    inst = _instance_from(args.k)
    c = parse_coloring(args.coloring)
    v = find_violation(c, inst)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "check",
        "instance": list(inst.k),
        "length": len(c),
        "valid": v is None,
    }
    if v is None:
        lines = [f"valid: {len(c)} positions avoid every forbidden progression"]
    else:
        doc["violation"] = {"color": v.color, "start": v.start, "gap": v.gap,
                            "length": v.length, "positions": list(v.positions)}
        lines = [f"invalid: {v}"]
    _emit(doc, args.json, lines)
    return EXIT_OK if v is None else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="vdw",
        description="Mixed van der Waerden numbers: exact search, "
                    "closed forms, certificate verification.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="exact w by exhaustive search")
    c.add_argument("--k", required=True,
                   help="instance as comma-separated integers, e.g. 4,3,2")
    c.add_argument("--budget", type=int, default=None,
                   help="node budget; exceeded search exits 2 with a lower bound")
    c.add_argument("--enumerate", action="store_true",
                   help="also enumerate all maximal valid colorings")
    c.add_argument("--parallel", action="store_true",
                   help="split the search across worker processes")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)

    f = sub.add_parser("formula", help="closed-form w2(k;r) evaluation")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--witness", action="store_true",
                   help="include a maximal valid coloring realizing value-1")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_formula)

    v = sub.add_parser("verify", help="verify a certificate dataset")
    v.add_argument("--data", default=None,
                   help="dataset path (defaults to the embedded catalog)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("check", help="check one coloring against an instance")
    k.add_argument("--k", required=True)
    k.add_argument("--coloring", required=True,
                   help="compact coloring string, e.g. '0^2 1 0^2'")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_check)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInstance, ColoringSyntaxError, ColorOutOfRange,
            HypothesisViolated, RangeTooLarge, DatasetFormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
