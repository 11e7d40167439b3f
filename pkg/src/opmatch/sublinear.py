"""Average-case sublinear search via backward factor recognition.

A factor tree is built over all length-b factors of the reversed pattern,
normalized to rep pairs.  The text is examined through a window of length m
whose end advances by m-b+1 each round: up to b symbols are read backward
from the window end through the tree.  If the read prefix is ever rejected,
no occurrence can contain those symbols and start within the current
verification range, so the whole range is skipped after only a few reads.
If all b symbols are recognized, every start in the range is checked
naively.  Consecutive verification ranges tile the text exactly, so each
candidate start is examined once and the result equals the naive scan.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from math import ceil, log2
from typing import Optional, Sequence

from .core import (Occurrence, PatternLike, PatternLongerThanText,
                   SearchStats, as_pattern, rep_sequence, scan_alignments)
from .mp_automaton import build_mp, mp_search

DEFAULT_B_FACTOR = 3.5  # scales the backward read length; tunable via CLI


class FallbackRequired(Exception):
    """The pattern is too short for backward-window search; use mp_search."""


def choose_b(m: int, factor: float = DEFAULT_B_FACTOR) -> Optional[int]:
    """Backward read length for pattern length m, or None to decline.

    b = min(ceil(factor * log2(m) / log2(log2(m))), m // 2).  Declines for
    m < 16 (log log degeneracy) and whenever the formula would exceed half
    the pattern, where the window arithmetic stops paying off.
    """
    if m < 16:
        return None
    raw = ceil(factor * log2(m) / log2(log2(m)))
    if raw > m / 2:
        return None
    return min(raw, m // 2)


@dataclass(frozen=True)
class WindowPlan:
    """Geometry of one search round: read b back, verify, shift."""

    b: int
    shift: int
    verify_range_length: int

    @staticmethod
    def for_length(m: int, b: int) -> "WindowPlan":
        if 2 * b > m:
            raise ValueError(f"backward read length {b} exceeds half of m={m}")
        return WindowPlan(b=b, shift=m - b + 1, verify_range_length=m - b + 1)


class FactorTree:
    """Trie of the normalized length-b factors of the reversed pattern.

    A backward read t_e, t_{e-1}, ... descends from the root, keying each
    step by the rep pair of the new symbol relative to the symbols read so
    far; the read sequence (of any length up to b) is accepted exactly when
    it is order-isomorphic to some factor of the reversed pattern.
    Immutable after build; searches keep their scratch state locally, so
    concurrent searches over one tree are safe.
    """

    __slots__ = ("b", "root")

    def __init__(self, b: int, root: dict):
        self.b = b
        self.root = root

    def match_depth(self, symbols: Sequence[int]) -> int:
        """How many of the given symbols (in read order) are accepted."""
        node = self.root
        for depth, pair in enumerate(rep_sequence(symbols)):
            node = node.get(pair)
            if node is None:
                return depth
        return len(symbols)


def build_factor_tree(p: PatternLike, b: int) -> FactorTree:
    pat = as_pattern(p)
    m = len(pat)
    if b > m:
        raise ValueError(f"factor length {b} exceeds pattern length {m}")
    reversed_vals = pat.values[::-1]
    root: dict = {}
    for s in range(m - b + 1):
        node = root
        for pair in rep_sequence(reversed_vals[s:s + b]):
            node = node.setdefault(pair, {})
    return FactorTree(b, root)


def sublinear_search(p: PatternLike, t: Sequence[int],
                     b_factor: float = DEFAULT_B_FACTOR):
    """All occurrences of p in t; raises FallbackRequired for short patterns.

    symbols_read counts tree reads plus verification reads; verifications
    counts naive per-start checks.
    """
    pat = as_pattern(p)
    m = len(pat)
    n = len(t)
    if m > n:
        raise PatternLongerThanText(f"pattern length {m} exceeds text length {n}")
    b = choose_b(m, b_factor)
    if b is None:
        raise FallbackRequired(f"no backward read length for m={m}")
    plan = WindowPlan.for_length(m, b)
    tree = build_factor_tree(pat, b)
    root = tree.root
    last_start = n - m + 1
    out = []
    reads = 0
    verifications = 0
    e = m
    while e <= n:
        node = root
        seen: list = []  # (value, read-order position), sorted by value
        depth = 0
        while depth < b:
            c = t[e - 1 - depth]
            reads += 1
            idx = bisect_left(seen, (c,))
            x1 = seen[idx - 1][1] if idx > 0 else None
            x2 = seen[idx][1] if idx < depth else None
            node = node.get((x1, x2))
            if node is None:
                break
            seen.insert(idx, (c, depth + 1))
            depth += 1
        if depth == b:
            lo = e - m + 1
            hi = min(e - b + 1, last_start)
            positions, vreads = scan_alignments(pat, t, lo, hi)
            out.extend(Occurrence(s) for s in positions)
            reads += vreads
            verifications += hi - lo + 1
        e += plan.shift
    stats = SearchStats(symbols_read=reads, verifications=verifications)
    return out, stats


def search_or_fallback(p: PatternLike, t: Sequence[int],
                       b_factor: float = DEFAULT_B_FACTOR):
    """sublinear_search, or mp_search when the engine declines.

    Returns (occurrences, stats, fell_back).
    """
    pat = as_pattern(p)
    try:
        occurrences, stats = sublinear_search(pat, t, b_factor)
        return occurrences, stats, False
    except FallbackRequired:
        occurrences, stats = mp_search(build_mp(pat), t)
        return occurrences, stats, True
