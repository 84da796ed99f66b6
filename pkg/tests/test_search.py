"""Search engine: exact values, enumeration, budgets, traces, config."""
import itertools

import pytest

from vdw.canon import canonical_form
from vdw.core import Instance
from vdw.search import (BudgetExhausted, SearchConfig, compute_w,
                        enumerate_maximal, search_trace)
from vdw.validity import is_valid

# values cross-checked against the brute-force oracle in tests/oracle.py
PINNED_W = {
    (2,): 2,
    (4,): 4,
    (2, 2): 3,
    (3, 2): 6,
    (3, 3): 9,
    (4, 2): 7,
    (4, 3): 18,
    (2, 2, 2): 4,
    (3, 2, 2): 7,
    (3, 3, 2): 14,
    (4, 2, 2): 11,
    (4, 3, 2): 21,
}

PINNED_COUNTS = {
    (3, 3): 3,
    (4, 3): 2,
    (3, 2, 2): 4,
    (3, 3, 2): 1,
    (4, 2, 2): 1,
    (2, 2, 2): 1,
    (4, 3, 1): 2,
}


class TestComputeW:
    @pytest.mark.parametrize("ks,w", sorted(PINNED_W.items()))
    def test_pinned_values(self, ks, w):
        out = compute_w(Instance.of(*ks))
        assert out.w == w
        assert out.exhaustive

    def test_trivial_instances(self):
        # a color with k=1 can never be used; with every color unusable, w=1
        assert compute_w(Instance.of(1,)).w == 1
        assert compute_w(Instance.of(1, 1)).w == 1
        assert compute_w(Instance.of(1, 3)).w == 3
        assert compute_w(Instance.of(3, 1)).w == 3
        assert compute_w(Instance.of(4, 1, 1)).w == 4

    def test_single_color(self):
        # one color, k-term progression forced exactly at length k
        assert compute_w(Instance.of(6,)).w == 6

    def test_color_order_irrelevant(self):
        for ks in itertools.permutations((3, 3, 2)):
            assert compute_w(Instance.of(*ks)).w == 14

    @pytest.mark.parametrize("symmetry", [True, False])
    @pytest.mark.parametrize("backjump", [True, False])
    def test_config_combinations_agree(self, symmetry, backjump):
        cfg = SearchConfig(symmetry_reduction=symmetry, backjump=backjump)
        assert compute_w(Instance.of(3, 3, 2), cfg).w == 14

    def test_parallel_matches_sequential(self):
        inst = Instance.of(3, 3, 2)
        seq = compute_w(inst, SearchConfig(enumerate_all=True))
        par = compute_w(inst, SearchConfig(enumerate_all=True, parallel=True))
        assert (seq.w, seq.certificates) == (par.w, par.certificates)
        assert par.exhaustive


class TestCertificates:
    @pytest.mark.parametrize("ks,count", sorted(PINNED_COUNTS.items()))
    def test_pinned_counts(self, ks, count):
        out = compute_w(Instance.of(*ks), SearchConfig(enumerate_all=True))
        assert len(out.certificates) == count

    def test_certificates_are_maximal_valid_canonical(self):
        inst = Instance.of(3, 3, 2)
        out = compute_w(inst, SearchConfig(enumerate_all=True))
        for c in out.certificates:
            assert len(c) == out.w - 1
            assert is_valid(c, inst)
            assert canonical_form(c, inst, include_reversal=False) == c
        assert list(out.certificates) == sorted(out.certificates)

    def test_disabled_by_default(self):
        assert compute_w(Instance.of(3, 3)).certificates is None

    def test_enumerate_maximal_matches(self):
        inst = Instance.of(3, 3)
        out = compute_w(inst, SearchConfig(enumerate_all=True))
        assert enumerate_maximal(inst, out.w) == set(out.certificates)

    def test_enumerate_above_maximal_is_empty(self):
        # no valid coloring of length 9 exists for (3,3)
        assert enumerate_maximal(Instance.of(3, 3), 10) == set()

    def test_enumerate_w1(self):
        assert enumerate_maximal(Instance.of(1, 3), 1) == {()}


class TestBudget:
    def test_stopped_search_is_lower_bound(self):
        out = compute_w(Instance.of(4, 3), SearchConfig(node_budget=50))
        assert not out.exhaustive
        assert out.nodes_explored <= 50
        assert out.w <= 18
        assert out.certificates is None

    def test_budget_large_enough_is_exhaustive(self):
        out = compute_w(Instance.of(3, 3), SearchConfig(node_budget=10**6))
        assert out.exhaustive
        assert out.w == 9

    def test_enumerate_raises(self):
        with pytest.raises(BudgetExhausted) as info:
            enumerate_maximal(Instance.of(4, 3), 18, SearchConfig(node_budget=50))
        assert info.value.nodes <= 50

    @pytest.mark.parametrize("bad", [0, -1])
    def test_rejected_at_construction(self, bad):
        with pytest.raises(ValueError):
            SearchConfig(node_budget=bad)


class TestTrace:
    def test_extend_count_equals_nodes(self):
        inst = Instance.of(3, 3)
        cfg = SearchConfig(enumerate_all=True)
        events = search_trace(inst, cfg)
        out = compute_w(inst, cfg)
        assert sum(e.decision == "extend" for e in events) == out.nodes_explored

    def test_deterministic(self):
        a = search_trace(Instance.of(3, 2, 2))
        b = search_trace(Instance.of(3, 2, 2))
        assert a == b

    def test_event_fields(self):
        for e in search_trace(Instance.of(3, 3)):
            assert e.decision in {"extend", "reject", "backtrack", "backjump"}
            assert e.position >= 1
            assert 0 <= e.color < 2

    def test_trivial_trace_empty(self):
        assert search_trace(Instance.of(1, 1)) == ()
