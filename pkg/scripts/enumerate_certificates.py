#!/usr/bin/env python3
"""Re-enumerate every maximal valid coloring for catalog entries and
cross-check the result against the bundled certificate families.

The search engine reports one representative per color-renaming class
(reversals folded together are NOT assumed: a coloring and its reversal
count separately unless they coincide).  Catalog families expand to
literal colorings, so both sides are canonicalized the same way before
comparison.

By default runs the entries that finish within a few minutes each; pass
--entries to pick specific instances (comma-separated lengths, ';' between
instances).  The omitted ones are expensive: (7,3,2,2) is under an hour on
one core, (4,3,3,2) and (6,4,2) far longer, and the remaining catalog
instances are out of enumeration reach entirely.  Use --budget to put a
hard node cap on anything you are unsure about.
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from vdw.canon import canonical_form
from vdw.certs import load_dataset
from vdw.core import format_coloring
from vdw.search import BudgetExhausted, SearchConfig, enumerate_maximal
from vdw.certs import expand_family

DEFAULT = "7,3,2;3,3,2,2,2;3,3,3,2,2"


def check_entry(entry, budget, backjump, dump):
    inst = entry.instance
    listed = set()
    for fam in entry.families:
        for c in expand_family(fam):
            listed.add(canonical_form(c, inst, include_reversal=False))
    t0 = time.perf_counter()
    cfg = SearchConfig(enumerate_all=True, node_budget=budget, backjump=backjump)
    try:
        found = enumerate_maximal(inst, entry.w, cfg)
    except BudgetExhausted as exc:
        print(f"ABORTED  w{inst} = {entry.w}: {exc}", flush=True)
        return False
    dt = time.perf_counter() - t0
    ok = found == listed
    tag = "MATCH   " if ok else "MISMATCH"
    print(f"{tag} w{inst} = {entry.w}: enumerated {len(found)}, "
          f"catalog {len(listed)}  ({dt:.1f}s)", flush=True)
    if not ok:
        for c in sorted(found - listed):
            print(f"  enumerated only: {format_coloring(c)}")
        for c in sorted(listed - found):
            print(f"  catalog only:    {format_coloring(c)}")
    if dump:
        for c in sorted(found):
            print(f"  {format_coloring(c)}")
    return ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--entries", default=DEFAULT,
                    help="instances to check, e.g. '7,3,2;3,3,2,2,2'")
    ap.add_argument("--budget", type=int, default=None,
                    help="abort an enumeration after this many search nodes")
    ap.add_argument("--no-backjump", action="store_true",
                    help="disable conflict-directed backjumping")
    ap.add_argument("--dump", action="store_true",
                    help="print every enumerated coloring")
    args = ap.parse_args()

    want = {tuple(int(x) for x in part.split(","))
            for part in args.entries.split(";") if part}
    dataset = load_dataset()
    picked = [e for e in dataset.entries if e.instance.k in want]
    missing = want - {e.instance.k for e in picked}
    if missing:
        print(f"not in catalog: {sorted(missing)}", file=sys.stderr)
        return 1

    bad = 0
    for entry in picked:
        bad += not check_entry(entry, args.budget, not args.no_backjump, args.dump)
    print(f"{len(picked)} entries, {bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
