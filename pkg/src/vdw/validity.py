"""Validity predicate: does a coloring avoid, for each color i, every k[i]-term
monochromatic arithmetic progression?

``find_violation`` scans ends in ascending position order (then gaps
ascending), so the reported violation is deterministic: smallest ending
position, then smallest gap.  ``extension_valid`` is the incremental kernel
used by the search engine: it checks only progressions ending at the newly
appended position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Coloring, ColorOutOfRange, Instance, InvalidInstance


@dataclass(frozen=True)
class Violation:
    """A k[color]-term progression of a single color: positions start, start+gap, ..."""

    color: int
    start: int
    gap: int
    length: int

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(self.start + t * self.gap for t in range(self.length))

    def __str__(self) -> str:
        return (f"color {self.color} at positions "
                f"{{{', '.join(map(str, self.positions))}}} (start {self.start}, gap {self.gap})")


def _check_inputs(c: Coloring, inst: Instance) -> None:
    for i, ki in enumerate(inst.k):
        if ki < 2:
            raise InvalidInstance(
                f"k[{i}]=1: classify with validate_instance first; "
                "validity checks require every k[i] >= 2")
    for p, x in enumerate(c, start=1):
        if not 0 <= x < inst.r:
            raise ColorOutOfRange(f"color {x} at position {p} outside [0, {inst.r - 1}]")


def find_violation(c: Coloring, inst: Instance) -> Violation | None:
    """Deterministic first violation (smallest end, then gap), or None."""
    _check_inputs(c, inst)
    n = len(c)
    for end in range(1, n + 1):
        x = c[end - 1]
        k = inst.k[x]
        for gap in range(1, (end - 1) // (k - 1) + 1):
            i = end - 1 - gap
            hit = True
            for _ in range(k - 1):
                if c[i] != x:
                    hit = False
                    break
                i -= gap
            if hit:
                return Violation(x, end - (k - 1) * gap, gap, k)
    return None


def is_valid(c: Coloring, inst: Instance) -> bool:
    return find_violation(c, inst) is None


def extension_valid(c: Coloring, inst: Instance, new_color: int) -> bool:
    """True iff appending ``new_color`` to the valid coloring ``c`` stays valid.

    Only progressions of the new color ending at position n+1 can appear, so
    only gaps d with (k-1)*d <= n need scanning; gaps are tried descending
    (large gaps fail fastest on sparse colors).
    """
    _check_inputs(c, inst)
    if not 0 <= new_color < inst.r:
        raise ColorOutOfRange(f"color {new_color} outside [0, {inst.r - 1}]")
    n = len(c)
    k = inst.k[new_color]
    for gap in range((n // (k - 1)) if k > 1 else 0, 0, -1):
        i = n - gap
        hit = True
        for _ in range(k - 1):
            if c[i] != new_color:
                hit = False
                break
            i -= gap
        if hit:
            return False
    return True
