"""Acceptance gate: one test per release criterion, named test_criterion_N_*.

Run with -v to get a pass/fail line per criterion.  Criterion 2 covers the
expensive recomputations and is opt-in behind the medium/long markers; all
other criteria run in the default suite.
"""

import itertools
import subprocess
import sys
import time
from pathlib import Path

import pytest

from oracle import oracle_w
from vdw.canon import canonical_form
from vdw.certs import expand_family, load_dataset, verify_dataset
from vdw.core import Instance
from vdw.formula import EXACT, LOWER_BOUND_ONLY, extremal_coloring, w2_formula
from vdw.search import SearchConfig, compute_w, enumerate_maximal
from vdw.table import FAST_TIER, KNOWN_W, LONG_TIER, MEDIUM_TIER
from vdw.validity import is_valid


def _note(line: str) -> None:
    print(line, file=sys.stderr)


def test_criterion_1_fast_table_regression():
    t0 = time.perf_counter()
    for ks in FAST_TIER:
        got = compute_w(Instance.of(*ks)).w
        assert got == KNOWN_W[ks], f"w{ks} computed {got}, recorded {KNOWN_W[ks]}"
    dt = time.perf_counter() - t0
    assert dt < 300, f"fast tier took {dt:.0f}s, budget 300s"
    _note(f"criterion 1: {len(FAST_TIER)} fast-tier values exact in {dt:.1f}s")


@pytest.mark.medium
def test_criterion_2_medium_table():
    for ks in MEDIUM_TIER:
        got = compute_w(Instance.of(*ks), SearchConfig(backjump=True)).w
        assert got == KNOWN_W[ks], f"w{ks} computed {got}, recorded {KNOWN_W[ks]}"
    _note(f"criterion 2 (medium): {len(MEDIUM_TIER)} values exact")


@pytest.mark.long
def test_criterion_2_long_table():
    for ks in LONG_TIER:
        got = compute_w(Instance.of(*ks), SearchConfig(backjump=True)).w
        assert got == KNOWN_W[ks], f"w{ks} computed {got}, recorded {KNOWN_W[ks]}"
    _note(f"criterion 2 (long): {len(LONG_TIER)} values exact")


def test_criterion_3_certificate_dataset_verifies():
    t0 = time.perf_counter()
    report = verify_dataset(load_dataset())
    dt = time.perf_counter() - t0
    assert report.ok, str(report)
    counts = [e.actual_total for e in report.entries]
    assert counts == [30, 1, 24, 4, 42, 12, 36, 8, 28, 5, 5, 42]
    assert dt < 5, f"verification took {dt:.2f}s, budget 5s"
    _note(f"criterion 3: 12 entries, counts {counts}, {dt:.2f}s")


def test_criterion_4_enumeration_reproduces_catalog():
    dataset = load_dataset()
    for ks in [(3, 3, 2, 2, 2), (7, 3, 2, 2)]:
        entry = next(e for e in dataset.entries if e.instance.k == ks)
        inst = entry.instance
        listed = {canonical_form(c, inst, include_reversal=False)
                  for f in entry.families for c in expand_family(f)}
        found = enumerate_maximal(inst, entry.w, SearchConfig(backjump=True))
        assert found == listed, (
            f"w{inst}: enumerated {len(found)} classes, catalog lists {len(listed)}")
    _note("criterion 4: enumeration matches catalog for (3,3,2,2,2) and (7,3,2,2)")


def test_criterion_5_oracle_equivalence():
    # everything with r <= 3 and k[i] <= 4 whose w stays small enough for the
    # layer-by-layer oracle; the rest of that box ((4,4)..., (3,3,3)...) has
    # w >= 27 and is covered by the recorded-table criteria instead
    too_big = {(4, 4), (4, 4, 4), (4, 4, 3), (4, 4, 2), (4, 4, 1),
               (4, 3, 3), (3, 3, 3)}
    instances = [ks
                 for r in (1, 2, 3)
                 for ks in itertools.combinations_with_replacement(range(4, 0, -1), r)
                 if ks not in too_big]
    assert len(instances) >= 20
    for ks in instances:
        assert compute_w(Instance.of(*ks)).w == oracle_w(ks), f"mismatch at {ks}"
    _note(f"criterion 5: {len(instances)} instances agree with the brute-force oracle")


def test_criterion_6_formula_vs_search():
    ranges = [(2, 10), (3, 10), (4, 10), (5, 7)]
    checked = 0
    for r, k_max in ranges:
        for k in range(r + 1, k_max + 1):
            res = w2_formula(k, r)
            searched = compute_w(Instance.of(k, *[2] * (r - 1))).w
            if res.status == EXACT:
                assert res.value == searched, f"w2({k};{r}) formula {res.value}, search {searched}"
            else:
                assert res.status == LOWER_BOUND_ONLY
                assert res.value <= searched, f"w2({k};{r}) bound {res.value} exceeds {searched}"
            checked += 1
    assert w2_formula(6, 4).value == 21 and w2_formula(6, 4).status == EXACT
    assert w2_formula(9, 4).value == 32 and w2_formula(9, 4).status == EXACT
    # the bound case: the formula stops at a lower bound, the search settles it
    res = w2_formula(10, 4)
    assert res.value == 34 and res.status == LOWER_BOUND_ONLY
    assert compute_w(Instance.of(10, 2, 2, 2)).w == 34
    _note(f"criterion 6: {checked} (k,r) pairs consistent; anchors 21/32/34 confirmed")


def test_criterion_7_construction_realizes_bound():
    cases = 0
    for r in range(2, 7):
        for k in range(r + 1, 41):
            inst = Instance.of(k, *[2] * (r - 1))
            c = extremal_coloring(k, r)
            assert len(c) == w2_formula(k, r).value - 1, f"length off at k={k}, r={r}"
            assert is_valid(c, inst), f"invalid construction at k={k}, r={r}"
            cases += 1
    assert cases >= 150
    _note(f"criterion 7: {cases} constructions valid at formula length")


def test_criterion_8_property_suite_standalone():
    props = Path(__file__).with_name("test_properties.py")
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", str(props), "-q", "-p", "no:cacheprovider"],
        capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    _note("criterion 8: property suite passes standalone")
