"""Exhaustive backtracking search for van der Waerden numbers.

w(k0,...,k_{r-1}) = 1 + (length of the longest valid coloring), so the engine
grows a coloring position by position, trying colors in ascending order and
pruning any placement that completes a k[x]-term progression of color x.  A
second, depth-bounded pass re-walks the tree to collect every valid coloring
of the maximal length.

Pruning aids, both optional:

* symmetry_reduction: colors sharing a k-value are interchangeable, so within
  each equal-k class the engine only builds colorings whose class colors first
  appear in ascending order.  The survivors are exactly the renaming-canonical
  forms (see canon), so nothing is lost and each orbit is built once.

* backjump: when no color fits at position p and none ever did at this node,
  every usable color was rejected by a concrete progression it would have
  completed.  Scanning gaps largest-first makes each rejection's witness reach
  back as little as possible; positions strictly between the deepest witness
  and p cannot unblock p, so the engine retreats straight to that witness.
  Sound in both passes: a node dead at p reaches neither depth p nor beyond.

Colors with k=1 can never be placed (a single occurrence is a 1-term
progression); colors with k=2 can be placed at most once, tracked by a flag
rather than gap scans.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .canon import canonical_form
from .core import Coloring, Instance, validate_instance


class BudgetExhausted(Exception):
    """Raised by enumerate_maximal when node_budget runs out mid-enumeration."""

    def __init__(self, nodes: int, best: int):
        super().__init__(f"node budget exhausted after {nodes} nodes (best depth {best})")
        self.nodes = nodes
        self.best = best


@dataclass(frozen=True)
class SearchConfig:
    enumerate_all: bool = False
    node_budget: int | None = None
    parallel: bool = False
    symmetry_reduction: bool = True
    backjump: bool = False

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be positive when set")


@dataclass(frozen=True)
class SearchOutcome:
    instance: Instance
    w: int
    certificates: tuple[Coloring, ...] | None
    nodes_explored: int
    elapsed: float
    exhaustive: bool


@dataclass(frozen=True)
class TraceEvent:
    """depth = assigned length after the event; position is 1-based."""

    depth: int
    position: int
    color: int
    decision: str  # extend | reject | backtrack | backjump


def _predecessors(k: tuple[int, ...]) -> list[int | None]:
    """For each usable color, the previous usable color of equal k (first-use
    ordering partner), or None if it leads its class."""
    pred: list[int | None] = [None] * len(k)
    last_of: dict[int, int] = {}
    for x, kx in enumerate(k):
        if kx >= 2:
            if kx in last_of:
                pred[x] = last_of[kx]
            last_of[kx] = x
    return pred


def _run(k, limit, collect, symmetry, backjump, budget, prefix, trace=None):
    """Iterative DFS from a fixed valid prefix.

    Returns (best, leaves, nodes, exhausted): best = longest length reached
    (including the prefix), leaves = all valid colorings of length == limit
    when collect is set, nodes = number of placements, exhausted = False iff
    the budget stopped the search early.  Positions inside the prefix are
    never revised; exhausting them ends the run.
    """
    r = len(k)
    if not any(kx >= 2 for kx in k):
        leaves = [tuple(prefix)] if collect and limit == len(prefix) else ([] if collect else None)
        return len(prefix), leaves, 0, True
    pred = _predecessors(k) if symmetry else None
    arr = list(prefix)
    base = len(arr)
    counts = [0] * r
    first = [-1] * r
    for i, x in enumerate(arr):
        counts[x] += 1
        if first[x] < 0:
            first[x] = i
    best = base
    leaves = [] if collect else None
    if limit is not None and base == limit:
        if collect:
            leaves.append(tuple(arr))
        return best, leaves, 0, True
    nodes = 0
    visit_placed: list[bool] = []
    visit_wit: list[int] = []
    x = 0  # next candidate color at the current depth
    fresh = True
    while True:
        p = len(arr)
        if fresh:
            while len(visit_placed) <= p:
                visit_placed.append(False)
                visit_wit.append(-1)
            visit_placed[p] = False
            visit_wit[p] = -1
            fresh = False
        placed = False
        while x < r:
            kx = k[x]
            if kx < 2:
                x += 1
                continue
            if pred is not None:
                px = pred[x]
                if px is not None and counts[px] == 0:
                    x += 1
                    continue
            # would placing x at index p complete a progression?  Gaps are
            # scanned largest-first, so wit ends up as the deepest index of
            # the largest-gap witness (-2: no violation); a violation needs
            # kx-1 earlier occurrences, so sparse colors skip the scan.
            wit = -2
            cx = counts[x]
            if kx == 2:
                if cx:
                    wit = first[x]
            elif cx >= kx - 1:
                g = p // (kx - 1)
                if kx == 3:
                    while g > 0:
                        if arr[p - g] == x and arr[p - 2 * g] == x:
                            wit = p - g
                            break
                        g -= 1
                else:
                    while g > 0:
                        i = p - g
                        t = kx - 1
                        while t:
                            if arr[i] != x:
                                break
                            i -= g
                            t -= 1
                        else:
                            wit = p - g
                            break
                        g -= 1
            if wit != -2:
                if wit > visit_wit[p]:
                    visit_wit[p] = wit
                if trace is not None:
                    trace.append(TraceEvent(p, p + 1, x, "reject"))
                x += 1
                continue
            if budget is not None and nodes >= budget:
                return best, leaves, nodes, False
            nodes += 1
            arr.append(x)
            counts[x] = cx + 1
            if first[x] < 0:
                first[x] = p
            visit_placed[p] = True
            if trace is not None:
                trace.append(TraceEvent(p + 1, p + 1, x, "extend"))
            placed = True
            break
        if placed:
            d = len(arr)
            if d > best:
                best = d
            if limit is not None and d == limit:
                if collect:
                    leaves.append(tuple(arr))
                y = arr.pop()
                counts[y] -= 1
                if counts[y] == 0:
                    first[y] = -1
                if trace is not None:
                    trace.append(TraceEvent(d - 1, d, y, "backtrack"))
                x = y + 1
            else:
                x = 0
                fresh = True
            continue
        # every color failed at index p
        if p == base:
            return best, leaves, nodes, True
        if backjump and not visit_placed[p]:
            # nothing was ever placeable here: all usable colors carry
            # witnesses, the deepest of which is visit_wit[p]
            q = visit_wit[p]
            if q < base:
                return best, leaves, nodes, True
            while len(arr) > q:
                y = arr.pop()
                counts[y] -= 1
                if counts[y] == 0:
                    first[y] = -1
            if trace is not None:
                trace.append(TraceEvent(q, q + 1, y, "backjump"))
            x = y + 1
        else:
            y = arr.pop()
            counts[y] -= 1
            if counts[y] == 0:
                first[y] = -1
            if trace is not None:
                trace.append(TraceEvent(p - 1, p, y, "backtrack"))
            x = y + 1


def _worker(args):
    k, limit, collect, symmetry, backjump, prefix = args
    best, leaves, nodes, _ = _run(k, limit, collect, symmetry, backjump, None, prefix)
    return best, leaves, nodes


def _worker_count() -> int:
    env = os.environ.get("VDW_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _split_prefixes(k, symmetry, want, max_depth):
    """Valid (reduced) prefixes at the shallowest depth giving >= want of
    them, for farming out to workers.  Returns (depth, prefixes, best, nodes);
    empty prefixes means the whole search finished during splitting."""
    depth = 0
    prefixes = [()]
    best = nodes = 0
    while depth < max_depth and len(prefixes) < want:
        depth += 1
        best, prefixes, n, _ = _run(k, depth, True, symmetry, False, None, ())
        nodes += n
        if not prefixes:
            break
    return depth, prefixes, best, nodes


def _parallel_run(k, limit, collect, symmetry, backjump):
    workers = _worker_count()
    cap = limit - 1 if limit is not None else 12
    depth, prefixes, best, nodes = _split_prefixes(k, symmetry, 4 * workers, max(cap, 0))
    leaves = [] if collect else None
    if not prefixes:
        return best, leaves, nodes, True
    tasks = [(k, limit, collect, symmetry, backjump, pfx) for pfx in prefixes]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        for wbest, wleaves, wnodes in pool.map(_worker, tasks):
            best = max(best, wbest)
            nodes += wnodes
            if collect:
                leaves.extend(wleaves)
    return best, leaves, nodes, True


def compute_w(inst: Instance, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Exact van der Waerden number of inst, by exhaustive search.

    With enumerate_all, certificates holds every maximal valid coloring in
    renaming-canonical form, sorted.  With node_budget, a stopped search
    reports exhaustive=False and w is only a lower bound (certificates are
    then omitted; a partial set would be misleading).
    """
    cfg = cfg or SearchConfig()
    info = validate_instance(inst)
    t0 = time.perf_counter()
    if info.trivial_w is not None:
        certs = ((),) if cfg.enumerate_all else None
        return SearchOutcome(inst, info.trivial_w, certs, 0, time.perf_counter() - t0, True)
    k = inst.k
    parallel = cfg.parallel and cfg.node_budget is None
    if parallel:
        best, _, nodes, exhausted = _parallel_run(k, None, False, cfg.symmetry_reduction,
                                                 cfg.backjump)
    else:
        best, _, nodes, exhausted = _run(k, None, False, cfg.symmetry_reduction,
                                         cfg.backjump, cfg.node_budget, ())
    certificates = None
    if cfg.enumerate_all and exhausted:
        if parallel:
            leaves, n2, ok2 = _parallel_run(k, best, True, cfg.symmetry_reduction,
                                            cfg.backjump)[1:4]
        else:
            _, leaves, n2, ok2 = _run(k, best, True, cfg.symmetry_reduction, cfg.backjump,
                                      None if cfg.node_budget is None else cfg.node_budget - nodes,
                                      ())
        nodes += n2
        if ok2:
            certificates = tuple(sorted({canonical_form(c, inst, include_reversal=False)
                                         for c in leaves}))
        else:
            exhausted = False
    return SearchOutcome(inst, best + 1, certificates, nodes,
                         time.perf_counter() - t0, exhausted)


def enumerate_maximal(inst: Instance, w: int, cfg: SearchConfig | None = None) -> set[Coloring]:
    """Every valid coloring of length w-1, as renaming-canonical forms.

    w must be the exact van der Waerden number of inst (so that length w-1 is
    maximal); this is trusted, not re-verified.  Reversal is not identified:
    a coloring and its distinct reversal are separate members.
    """
    cfg = cfg or SearchConfig()
    if w < 1:
        raise ValueError("w must be at least 1")
    if w == 1:
        return {()}
    k = inst.k
    if cfg.parallel and cfg.node_budget is None:
        _, leaves, nodes, exhausted = _parallel_run(k, w - 1, True,
                                                    cfg.symmetry_reduction, cfg.backjump)
    else:
        _, leaves, nodes, exhausted = _run(k, w - 1, True, cfg.symmetry_reduction,
                                           cfg.backjump, cfg.node_budget, ())
    if not exhausted:
        raise BudgetExhausted(nodes, w - 1)
    return {canonical_form(c, inst, include_reversal=False) for c in leaves}


def search_trace(inst: Instance, cfg: SearchConfig | None = None) -> tuple[TraceEvent, ...]:
    """Deterministic event stream of the sequential search compute_w runs.

    Two calls with equal arguments yield identical streams, and the number of
    extend events equals the nodes_explored that compute_w reports (parallel
    is ignored: traces are only defined for the sequential engine).
    """
    cfg = cfg or SearchConfig()
    info = validate_instance(inst)
    if info.trivial_w is not None:
        return ()
    events: list[TraceEvent] = []
    k = inst.k
    best, _, nodes, exhausted = _run(k, None, False, cfg.symmetry_reduction, cfg.backjump,
                                     cfg.node_budget, (), trace=events)
    if cfg.enumerate_all and exhausted:
        _run(k, best, True, cfg.symmetry_reduction, cfg.backjump,
             None if cfg.node_budget is None else cfg.node_budget - nodes, (), trace=events)
    return tuple(events)
