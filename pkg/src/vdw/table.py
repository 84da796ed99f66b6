"""Known exact van der Waerden numbers for small instances.

Keyed by the k-sequence in the conventional non-increasing order; every value
is reproducible with compute_w, though the cost spans three tiers:

    FAST_TIER    seconds each; the default regression set
    MEDIUM_TIER  minutes to an hour each on one core; (6,4,2) is the
                 outlier, since its search subsumes the whole (6,4) tree
    LONG_TIER    hours or more; run deliberately, never in routine test runs
"""

from __future__ import annotations

KNOWN_W: dict[tuple[int, ...], int] = {
    (3, 3): 9,
    (4, 3): 18,
    (4, 4): 35,
    (5, 3): 22,
    (5, 4): 55,
    (5, 5): 178,
    (6, 3): 32,
    (6, 4): 73,
    (7, 3): 46,
    (7, 4): 109,
    (8, 3): 58,
    (9, 3): 77,
    (10, 3): 97,
    (11, 3): 114,
    (12, 3): 135,
    (13, 3): 160,
    (3, 3, 2): 14,
    (3, 3, 3): 27,
    (4, 3, 2): 21,
    (4, 3, 3): 51,
    (4, 4, 2): 40,
    (4, 4, 3): 89,
    (5, 3, 2): 32,
    (5, 3, 3): 80,
    (5, 4, 2): 71,
    (6, 3, 2): 40,
    (6, 4, 2): 83,
    (7, 3, 2): 55,
    (3, 3, 2, 2): 17,
    (3, 3, 3, 2): 40,
    (3, 3, 3, 3): 76,
    (4, 3, 2, 2): 25,
    (4, 3, 3, 2): 60,
    (4, 4, 2, 2): 53,
    (5, 3, 2, 2): 43,
    (6, 3, 2, 2): 48,
    (7, 3, 2, 2): 65,
    (3, 3, 2, 2, 2): 20,
    (3, 3, 3, 2, 2): 41,
}

FAST_TIER: tuple[tuple[int, ...], ...] = (
    (3, 3), (4, 3), (5, 3), (6, 3),
    (3, 3, 2), (4, 3, 2), (5, 3, 2), (6, 3, 2), (3, 3, 3),
    (3, 3, 2, 2), (4, 3, 2, 2), (3, 3, 2, 2, 2),
)

MEDIUM_TIER: tuple[tuple[int, ...], ...] = (
    (4, 4), (5, 4), (7, 3),
    (4, 4, 2), (4, 3, 3), (6, 4, 2), (7, 3, 2),
    (3, 3, 3, 2), (4, 3, 3, 2), (6, 3, 2, 2), (7, 3, 2, 2),
    (3, 3, 3, 2, 2),
)

LONG_TIER: tuple[tuple[int, ...], ...] = (
    (6, 4), (5, 3, 3), (4, 4, 3), (5, 5), (11, 3), (12, 3), (13, 3),
)
