import itertools

import pytest

from oracle import oracle_is_valid
from vdw import (
    ColorOutOfRange,
    Instance,
    InvalidInstance,
    extension_valid,
    find_violation,
    is_valid,
    parse_coloring,
)


class TestFindViolation:
    def test_gap_two(self):
        v = find_violation((0, 1, 0, 1, 0), Instance.of(3, 3))
        assert v is not None
        assert (v.color, v.start, v.gap, v.length) == (0, 1, 2, 3)
        assert v.positions == (1, 3, 5)

    def test_reports_smallest_end_first(self):
        # both colors complete a progression; the one ending earlier wins
        v = find_violation((0, 0, 0, 1, 1, 1), Instance.of(3, 3))
        assert (v.color, v.start, v.gap) == (0, 1, 1)

    def test_reports_smallest_gap_on_tied_end(self):
        # 0,1,0,0,0 first violates at end 5, where gaps 1 and 2 both
        # complete a progression of color 0; gap 1 is reported
        v = find_violation((0, 1, 0, 0, 0), Instance.of(3, 9))
        assert (v.color, v.start, v.gap) == (0, 3, 1)

    def test_none_when_valid(self):
        assert find_violation(parse_coloring("00110011"), Instance.of(3, 3)) is None

    def test_respects_per_color_k(self):
        inst = Instance.of(4, 3)
        assert find_violation((0, 0, 0), inst) is None
        v = find_violation((1, 1, 1), inst)
        assert (v.color, v.start, v.gap) == (1, 1, 1)

    def test_two_same_color_is_enough_when_k_is_2(self):
        inst = Instance.of(3, 2)
        v = find_violation((1, 0, 0, 1), inst)
        assert (v.color, v.start, v.gap, v.length) == (1, 1, 3, 2)

    def test_str_mentions_positions(self):
        v = find_violation((0, 0, 0), Instance.of(3, 3))
        assert "{1, 2, 3}" in str(v)


class TestErrors:
    def test_unit_k_rejected(self):
        with pytest.raises(InvalidInstance):
            is_valid((0,), Instance.of(3, 1))

    def test_color_out_of_range(self):
        with pytest.raises(ColorOutOfRange):
            is_valid((0, 2), Instance.of(3, 3))
        with pytest.raises(ColorOutOfRange):
            extension_valid((0,), Instance.of(3, 3), 2)
        with pytest.raises(ColorOutOfRange):
            extension_valid((0, 3), Instance.of(3, 3), 1)


@pytest.mark.parametrize("ks,n", [((3, 3), 9), ((4, 2), 8), ((3, 2, 2), 8)])
def test_matches_oracle_exhaustively(ks, n):
    inst = Instance.of(*ks)
    for c in itertools.product(range(inst.r), repeat=n):
        assert is_valid(c, inst) == oracle_is_valid(c, ks)


def test_extension_agrees_with_full_check():
    inst = Instance.of(3, 3)
    layer = [()]
    for _ in range(8):
        nxt = []
        for c in layer:
            for x in range(inst.r):
                assert extension_valid(c, inst, x) == is_valid(c + (x,), inst)
                if is_valid(c + (x,), inst):
                    nxt.append(c + (x,))
        layer = nxt
    assert layer  # w(3,3)=9, so valid colorings of length 8 exist
