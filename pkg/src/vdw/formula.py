"""Closed-form values and lower bounds for w2(k;r) = w(k,2,...,2) with r-1
trailing 2s: one color avoids k-term progressions, every other color may be
used at most once.

Everything is driven by how far k sits from a number coprime to the
r-primorial #r (the product of the primes up to r):

    j = min{j >= 0 : gcd(k-j, #r) = 1}
    l = min{l >= 0 : gcd(k-l, #r) = r}   (searched for l <= k-2; may not exist)
    m = min(j, l)

Case dispatch, with #p = pi(r) the prime count:

    j = 0                     -> rk            exact            (I)
    j = 1                     -> rk - r + 1    exact            (II.i)
    r prime, l = 0            -> rk - r + 1    exact            (II.ii)
    r composite, j >= 2       -> rk - j(r-2)   exact iff j = 2 and k >= 2r-3,
                                 or j >= 3 and k >= pi(r)^3 (r-2)   (III.i/.ii)
    r prime, j >= 2, l >= 1   -> rk - m(r-2)   exact iff l = 1, or m = 2 and
                                 k >= 2r-3, or m >= 3 and k >= pi(r)^3 (r-2)
                                                                 (IV.i/.ii/.iii)

Unmet thresholds leave the same value as a lower bound (III-bound/IV-bound).
For r = 4 and j = 3 the threshold k >= 16 is far from tight: the only such k
below it is 10, and direct search confirms w2(10;4) = 34 = 4k - 6, so the
bound is exact there too.  The result reports this as search_confirmed
without touching the formal status.

The threshold pi(r)^3 (r-2) enters through C(r), the longest run of
consecutive integers each divisible by a prime <= r (Jacobsthal's function at
#r, less one): j never exceeds C(r), and C(r) < pi(r)^3 for the r of interest.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .core import Coloring


EXACT = "Exact"
LOWER_BOUND_ONLY = "LowerBoundOnly"

# jacobsthal_run scans two primorial periods; past this the sieve is unreasonable
_MAX_PRIMORIAL = 20_000_000


class HypothesisViolated(ValueError):
    """The closed form needs k > r >= 2."""


class RangeTooLarge(ValueError):
    """jacobsthal_run's scan would exceed the feasibility cap."""


def _primes_upto(r: int) -> list[int]:
    return [p for p in range(2, r + 1) if all(p % q for q in range(2, p))]


def _is_prime(r: int) -> bool:
    return r >= 2 and all(r % q for q in range(2, r))


@dataclass(frozen=True)
class NumberTheoryContext:
    r: int
    primes: tuple[int, ...]
    pi_r: int
    primorial: int

    @classmethod
    def of(cls, r: int) -> "NumberTheoryContext":
        primes = tuple(_primes_upto(r))
        return cls(r, primes, len(primes), prod(primes))


@dataclass(frozen=True)
class FormulaResult:
    k: int
    r: int
    j: int
    l: int | None
    m: int | None
    value: int
    status: str  # EXACT or LOWER_BOUND_ONLY
    case: str  # I, II.i, II.ii, III.i, III.ii, III-bound, IV.i, IV.ii, IV.iii, IV-bound
    search_confirmed: bool = False


def j_value(k: int, r: int) -> int:
    """Least j >= 0 with gcd(k-j, #r) = 1; exists since gcd(1, #r) = 1."""
    if k < 2 or r < 2:
        raise ValueError("need k >= 2 and r >= 2")
    primorial = NumberTheoryContext.of(r).primorial
    j = 0
    while gcd(k - j, primorial) != 1:
        j += 1
    return j


def l_value(k: int, r: int) -> int | None:
    """Least l in [0, k-2] with gcd(k-l, #r) = r, or None.

    gcd = r forces r | k-l, so for r not squarefree (r=4, 8, 9, ...) no l
    exists; for prime r, l = k-r always qualifies, so the search succeeds.
    """
    if k < 2 or r < 2:
        raise ValueError("need k >= 2 and r >= 2")
    primorial = NumberTheoryContext.of(r).primorial
    for l in range(k - 1):
        if gcd(k - l, primorial) == r:
            return l
    return None


def jacobsthal_run(r: int) -> int:
    """Exact C(r): longest run of consecutive integers each divisible by a
    prime <= r.

    The divisibility pattern is periodic mod #r and x = 1 mod #r is always
    coprime, so two periods are sieved (covering any wrap) and the longest
    stretch of marked bytes is read off.
    """
    ctx = NumberTheoryContext.of(r)
    if r < 2:
        raise ValueError("need r >= 2")
    if ctx.primorial > _MAX_PRIMORIAL:
        raise RangeTooLarge(
            f"primorial {ctx.primorial} exceeds the scan cap {_MAX_PRIMORIAL}")
    span = 2 * ctx.primorial
    marked = bytearray(span + 1)  # marked[x] = 1 iff some prime <= r divides x
    for p in ctx.primes:
        marked[p::p] = b"\x01" * (span // p)
    # x = 0 is divisible by everything but is not a positive integer
    marked[0] = 0
    return max(len(run) for run in bytes(marked).split(b"\x00"))


def _case_infeasible(k: int, r: int) -> None:
    if r < 2 or k <= r:
        raise HypothesisViolated(f"need k > r >= 2, got k={k}, r={r}")


def w2_formula(k: int, r: int) -> FormulaResult:
    """Value of w2(k;r) per the case table in the module docstring."""
    _case_infeasible(k, r)
    ctx = NumberTheoryContext.of(r)
    j = j_value(k, r)
    l = l_value(k, r)
    m = min(j, l) if l is not None else None
    if j == 0:
        return FormulaResult(k, r, j, l, m, r * k, EXACT, "I")
    if j == 1:
        return FormulaResult(k, r, j, l, m, r * k - r + 1, EXACT, "II.i")
    prime = _is_prime(r)
    if prime and l == 0:
        return FormulaResult(k, r, j, l, m, r * k - r + 1, EXACT, "II.ii")
    if not prime:
        value = r * k - j * (r - 2)
        if j == 2 and k >= 2 * r - 3:
            return FormulaResult(k, r, j, l, m, value, EXACT, "III.i")
        if j >= 3 and k >= ctx.pi_r ** 3 * (r - 2):
            return FormulaResult(k, r, j, l, m, value, EXACT, "III.ii")
        override = r == 4 and j == 3 and k >= 5
        return FormulaResult(k, r, j, l, m, value, LOWER_BOUND_ONLY, "III-bound", override)
    # r prime, j >= 2, l >= 1
    value = r * k - m * (r - 2)
    if l == 1:
        return FormulaResult(k, r, j, l, m, value, EXACT, "IV.i")
    if m == 2 and k >= 2 * r - 3:
        return FormulaResult(k, r, j, l, m, value, EXACT, "IV.ii")
    if m >= 3 and k >= ctx.pi_r ** 3 * (r - 2):
        return FormulaResult(k, r, j, l, m, value, EXACT, "IV.iii")
    return FormulaResult(k, r, j, l, m, value, LOWER_BOUND_ONLY, "IV-bound")


def extremal_coloring(k: int, r: int) -> Coloring:
    """The lower-bound coloring behind w2_formula's fired case.

    Valid for the instance (k, 2, ..., 2) with length w2_formula(k,r).value-1
    for every k > r >= 2, whatever the status: each non-zero color appears
    once and the 0-blocks are sized so no k-term 0-progression fits.
    """
    _case_infeasible(k, r)
    res = w2_formula(k, r)
    zeros = [0] * (k - 1)
    out: list[int] = []
    if res.case == "I":
        # 0^{k-1} 1 0^{k-1} 2 ... (r-1) 0^{k-1}
        out += zeros
        for color in range(1, r):
            out.append(color)
            out += zeros
    elif res.case == "II.i":
        # 0^{k-1} 1 0^{k-2} 2 0^{k-2} ... (r-1) 0^{k-2}
        out += zeros
        for color in range(1, r):
            out.append(color)
            out += [0] * (k - 2)
    elif res.case == "II.ii":
        # 0^{k-1} 1 0^{k-1} ... (r-1) 0^{k-r}
        out += zeros
        for color in range(1, r - 1):
            out.append(color)
            out += zeros
        out.append(r - 1)
        out += [0] * (k - r)
    else:
        # III/IV: 0^{k-1} 1 0^{k-t-1} 2 0^{k-t-1} ... (r-1) 0^{k-1},
        # t = j (composite r) or m (prime r)
        t = res.j if res.case.startswith("III") else res.m
        out += zeros
        for color in range(1, r - 1):
            out.append(color)
            out += [0] * (k - t - 1)
        out.append(r - 1)
        out += zeros
    return tuple(out)
