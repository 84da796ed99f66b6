"""Coloring equivalence under color renaming, and optionally reversal.

Two colorings are considered the same when one maps to the other by renaming
colors with equal k-values (swapping color names that carry different
progression bounds would change the avoidance condition).  Reversal is a
second, separately-tracked symmetry: counts of "distinct" maximal colorings
treat a coloring and its reversal as two objects unless they coincide, so
identification-by-reversal is optional throughout.

The lexicographically least member of a renaming orbit is obtained directly:
relabel the colors of each equal-k class in order of first appearance.  (A
greedy exchange argument shows this beats every other admissible renaming
position by position.)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, prod

from .core import Coloring, Instance, reverse


@dataclass(frozen=True)
class SymmetryGroup:
    """Color permutations preserving the instance, as full r-tuples σ (color i ↦ σ[i])."""

    color_permutations: tuple[tuple[int, ...], ...]
    include_reversal: bool = True

    @property
    def order(self) -> int:
        return len(self.color_permutations)


def symmetry_group(inst: Instance) -> SymmetryGroup:
    """All color permutations σ with k[σ(i)] = k[i], i.e. products of
    permutations within each equal-k class.  Order = Π (class size)!."""
    classes: dict[int, list[int]] = {}
    for i, ki in enumerate(inst.k):
        classes.setdefault(ki, []).append(i)
    perms = []
    class_lists = list(classes.values())
    for images in itertools.product(*(itertools.permutations(cls) for cls in class_lists)):
        sigma = [0] * inst.r
        for cls, img in zip(class_lists, images):
            for src, dst in zip(cls, img):
                sigma[src] = dst
        perms.append(tuple(sigma))
    group = SymmetryGroup(tuple(sorted(perms)))
    assert group.order == prod(factorial(len(cls)) for cls in class_lists)
    return group


def _relabel(c: Coloring, inst: Instance) -> Coloring:
    """Lex-least renaming: within each equal-k class, colors are renumbered
    in order of first appearance."""
    pools: dict[int, list[int]] = {}
    for i, ki in enumerate(inst.k):
        pools.setdefault(ki, []).append(i)
    taken: dict[int, int] = {}  # class key -> how many names already assigned
    mapping: dict[int, int] = {}
    out = []
    for x in c:
        y = mapping.get(x)
        if y is None:
            key = inst.k[x]
            y = pools[key][taken.get(key, 0)]
            taken[key] = taken.get(key, 0) + 1
            mapping[x] = y
        out.append(y)
    return tuple(out)


def canonical_form(c: Coloring, inst: Instance, include_reversal: bool = True) -> Coloring:
    """Lexicographically least coloring in the orbit of c.

    The orbit is {σ∘c} over the renaming group, plus {σ∘reverse(c)} when
    include_reversal is set.  Idempotent; constant on orbits.
    """
    fwd = _relabel(c, inst)
    if not include_reversal:
        return fwd
    return min(fwd, _relabel(reverse(c), inst))


def dedup(cs, inst: Instance, include_reversal: bool = True) -> list[Coloring]:
    """Canonicalize, drop duplicates, return sorted."""
    return sorted({canonical_form(c, inst, include_reversal) for c in cs})
