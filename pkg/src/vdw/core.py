"""Domain types for mixed van der Waerden search plus the compact coloring codec.

A coloring of the integer interval [1, n] is stored as a tuple of ints,
entry p-1 holding the color of integer p.  Positions are 1-based in all
reporting.  The compact string notation writes a run of t equal colors i
as ``i^t`` (no exponent for runs of length 1); colors above 9 are
parenthesized, e.g. ``(10)^3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

Coloring = tuple[int, ...]


class InvalidInstance(ValueError):
    """Instance parameters violate r >= 1, len(k) == r, or k[i] >= 1."""


class ColorOutOfRange(ValueError):
    """A coloring entry falls outside [0, r-1] for the instance in use."""


class ColoringSyntaxError(ValueError):
    """Compact coloring text failed to parse; ``position`` is the 1-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Instance:
    """The tuple (r; k_0,...,k_{r-1}): color i must avoid k[i]-term progressions."""

    r: int
    k: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(self.k))
        if self.r < 1:
            raise InvalidInstance(f"need at least one color, got r={self.r}")
        if len(self.k) != self.r:
            raise InvalidInstance(f"r={self.r} but {len(self.k)} progression lengths given")
        for i, ki in enumerate(self.k):
            if not isinstance(ki, int) or ki < 1:
                raise InvalidInstance(f"k[{i}]={ki}; every forbidden length must be a positive integer")

    @classmethod
    def of(cls, *k: int) -> "Instance":
        return cls(len(k), tuple(k))

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.k) + ")"


@dataclass(frozen=True)
class InstanceInfo:
    """Classification attached to a validated instance.

    unusable: colors with k[i]=1 (a single element of that color is already a
    1-term progression, so the color can never appear in a valid coloring).
    at_most_once: colors with k[i]=2 (two occurrences of the color, at any two
    positions, form a 2-term progression).
    trivial_w: 1 when no color is usable at all, else None.
    """

    instance: Instance
    unusable: tuple[int, ...]
    at_most_once: tuple[int, ...]
    trivial_w: int | None


def validate_instance(inst: Instance) -> InstanceInfo:
    """Classify an instance's colors; construction already enforced the invariants."""
    unusable = tuple(i for i, ki in enumerate(inst.k) if ki == 1)
    at_most_once = tuple(i for i, ki in enumerate(inst.k) if ki == 2)
    trivial_w = 1 if len(unusable) == inst.r else None
    return InstanceInfo(inst, unusable, at_most_once, trivial_w)


_TOKEN = re.compile(r"\s*(?:(\d)|\((\d+)\))(?:\^(\d+))?")


def parse_coloring(text: str) -> Coloring:
    """Expand compact coloring text into a tuple of colors.

    Grammar: a sequence of tokens, optionally whitespace-separated; a token is
    a single digit or a parenthesized decimal, followed by an optional
    ``^exponent`` with a positive decimal exponent.  Separator-free digit runs
    like ``00111`` parse one digit per token.
    """
    out: list[int] = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == m.start():
            rest = text[pos:].lstrip()
            if not rest:
                break
            bad_at = n - len(rest) + 1
            raise ColoringSyntaxError(f"unexpected character {rest[0]!r}", bad_at)
        color = int(m.group(1) if m.group(1) is not None else m.group(2))
        if m.group(3) is not None:
            exponent = int(m.group(3))
            if exponent == 0:
                raise ColoringSyntaxError("exponent 0 is not defined", m.start(3) + 1)
        else:
            exponent = 1
        out.extend([color] * exponent)
        pos = m.end()
    return tuple(out)


def _color_text(color: int) -> str:
    return str(color) if color < 10 else f"({color})"


def format_coloring(c: Coloring, compact: bool = False) -> str:
    """Render a coloring; round-trips through parse_coloring exactly.

    compact=False emits one token per position with no separators; compact=True
    emits whitespace-separated run-length tokens, never with ^0 or ^1.
    """
    if not compact:
        return "".join(_color_text(x) for x in c)
    tokens: list[str] = []
    i = 0
    n = len(c)
    while i < n:
        j = i
        while j < n and c[j] == c[i]:
            j += 1
        run = j - i
        tokens.append(_color_text(c[i]) + (f"^{run}" if run > 1 else ""))
        i = j
    return " ".join(tokens)


def reverse(c: Coloring) -> Coloring:
    """Mirror a coloring: position p of the output is position n+1-p of the input."""
    return c[::-1]
