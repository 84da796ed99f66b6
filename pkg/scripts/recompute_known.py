#!/usr/bin/env python3
"""Recompute the published van der Waerden numbers, tier by tier.

Tiers group instances by cost: fast finishes in seconds and runs in CI,
medium takes minutes to an hour per instance, long takes hours (run it
deliberately).  Exits nonzero if any recomputed value disagrees with the
recorded one.
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from vdw.core import Instance
from vdw.search import SearchConfig, compute_w
from vdw.table import FAST_TIER, KNOWN_W, LONG_TIER, MEDIUM_TIER

TIERS = {"fast": FAST_TIER, "medium": MEDIUM_TIER, "long": LONG_TIER}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tier", choices=[*TIERS, "all"], default="fast")
    ap.add_argument("--parallel", action="store_true",
                    help="use the search engine's process pool")
    ap.add_argument("--no-backjump", action="store_true",
                    help="disable conflict-directed backjumping")
    args = ap.parse_args()

    targets = []
    for name in TIERS if args.tier == "all" else [args.tier]:
        targets.extend(TIERS[name])

    cfg = SearchConfig(parallel=args.parallel, backjump=not args.no_backjump)
    bad = 0
    t_all = time.perf_counter()
    for ks in targets:
        want = KNOWN_W[ks]
        t0 = time.perf_counter()
        out = compute_w(Instance.of(*ks), cfg)
        dt = time.perf_counter() - t0
        ok = out.w == want
        bad += not ok
        tag = "ok " if ok else "BAD"
        print(f"{tag} w{out.instance} = {out.w} (recorded {want})  "
              f"nodes={out.nodes_explored}  {dt:.2f}s", flush=True)
    print(f"{len(targets)} instances, {bad} mismatches, "
          f"{time.perf_counter() - t_all:.1f}s total")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
