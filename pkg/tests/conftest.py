"""Shared brute-force oracles and input generators for the test suite.

The oracles here deliberately re-derive everything from definitions
(sorting, exhaustive scans) instead of reusing package internals, so they
stay independent of the code paths they certify.
"""

from __future__ import annotations

import random
from itertools import permutations


def oracle_ranks(seq):
    """Rank vector computed by sorting, 1 = smallest."""
    order = sorted(seq)
    return tuple(order.index(v) + 1 for v in seq)


def oracle_oi(a, b):
    """Order-isomorphy as equality of rank vectors."""
    return len(a) == len(b) and oracle_ranks(a) == oracle_ranks(b)


def oracle_rep_pairs(values):
    """Predecessor/successor positions per prefix by exhaustive scan."""
    out = []
    for j, v in enumerate(values):
        x1 = x2 = None
        for i in range(j):
            if values[i] < v and (x1 is None or values[i] > values[x1 - 1]):
                x1 = i + 1
            if values[i] > v and (x2 is None or values[i] < values[x2 - 1]):
                x2 = i + 1
        out.append((x1, x2))
    return out


def oracle_border_table(values):
    """Longest proper order-isomorphic border of every prefix, by ranks."""
    m = len(values)
    out = []
    for j in range(1, m + 1):
        best = 0
        for k in range(j - 1, 0, -1):
            if oracle_oi(values[:k], values[j - k:j]):
                best = k
                break
        out.append(best)
    return tuple(out)


def oracle_positions(pattern_values, text):
    """All 1-based occurrence positions by definitional window comparison."""
    m = len(pattern_values)
    pref = oracle_ranks(pattern_values)
    return [s + 1 for s in range(len(text) - m + 1)
            if oracle_ranks(text[s:s + m]) == pref]


def rank_patterns(m):
    """Every pattern shape of length m, one representative per OI class."""
    return [perm for perm in permutations(range(1, m + 1))]


def random_distinct(rng: random.Random, length, lo=-10**6, hi=10**6):
    """Random pairwise-distinct integers, arbitrary magnitudes."""
    return rng.sample(range(lo, hi), length)
