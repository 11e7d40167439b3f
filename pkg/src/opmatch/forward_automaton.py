"""Fully expanded search automaton with interval-labelled backward moves.

Where the failure-link automaton may re-test one text symbol several times,
this automaton resolves every (state, symbol-order-class) pair to a single
consuming transition.  At state x the x prefix symbols split the value axis
into x+1 order classes; each class not accepted by the forward label gets a
backward transition whose target is found by simulating the failure-link
descent with a virtual symbol planted inside that class.  Adjacent classes
with the same target are merged, which keeps the total transition count
linear in the pattern length.

Interval labels are stored as window positions and resolved against the
live text window while searching, so transitions never mention concrete
values.  Backward transitions are tested in increasing jump length, which
amortizes the search to at most 2n transition tests.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from typing import List, NamedTuple, Optional, Sequence

from .core import (Occurrence, Pattern, PatternLongerThanText, SearchStats,
                   _rep0)
from .mp_automaton import MpAutomaton


class IntervalTransition(NamedTuple):
    """Backward move taken when window[low] < symbol < window[high].

    ``low``/``high`` are 1-based positions in the current window (None for
    an unbounded side); ``target`` is the state reached after consuming the
    symbol.
    """

    low: Optional[int]
    high: Optional[int]
    target: int


class ForwardAutomaton:
    """Interval-transition automaton over states 0..m.

    The eager build materializes every state's backward transitions up
    front and the automaton is then immutable (concurrent searches are
    safe).  The lazy variant starts empty and fills in one state's
    transitions the first time a search needs them; a lazy instance mutates
    during searches and must not be shared between threads.
    """

    def __init__(self, mp: MpAutomaton, lazy: bool):
        self.pattern: Pattern = mp.pattern
        self.m: int = mp.m
        self.fail = mp.fail
        self.lazy = lazy
        self._rep = mp.pattern.rep
        self._rep0 = _rep0(mp.pattern)
        # doubled ranks by 1-based position; odd virtual values fall strictly
        # between two window values without ever colliding with one
        self._d2 = [0] + [2 * r for r in mp.pattern.ranks]
        self._backward: List[Optional[list]] = [None] * (self.m + 1)
        self._backward[0] = []

    def backward_for(self, x: int) -> list:
        """State x's backward transitions, materializing them if lazy."""
        lst = self._backward[x]
        if lst is None:
            d2 = self._d2
            pairs = sorted((d2[pos], pos) for pos in range(1, x + 1))
            vals2 = [v for v, _ in pairs]
            positions = [p for _, p in pairs]
            lst = self._state_transitions(x, vals2, positions)
            self._backward[x] = lst
        return lst

    def transition_count(self) -> int:
        """Forward transitions plus all currently materialized backward ones."""
        return self.m + sum(len(lst) for lst in self._backward if lst)

    def materialized_states(self) -> list:
        """States (>=1) whose backward transitions exist right now."""
        return [x for x in range(1, self.m + 1) if self._backward[x] is not None]

    def _state_transitions(self, x: int, vals2: list, positions: list) -> list:
        """Resolve all order classes of state x to merged interval moves.

        Classes are indexed 0..x in increasing value order; class r stands
        for a symbol falling between the (r-1)-th and r-th smallest window
        values (doubled-rank virtual value vals2[r-1] + 1, or below/above
        everything at the ends).  All classes descend the same failure
        chain, and at each chain state the accepting classes form one
        contiguous value range, so the descent processes whole index
        segments: a segment's surviving part commits to target q+1, the
        rest falls through to the next chain state.  Committed segments are
        maximal same-target runs, which makes merging implicit.
        """
        m = self.m
        rep = self._rep
        fail = self.fail
        d2 = self._d2
        segments = []
        if x < m:
            x1, x2 = rep[x]  # forward label of state x, its class gets no move
            if x1 is None:
                rf = 0
            elif x2 is None:
                rf = x
            else:
                rf = bisect_left(vals2, d2[x1]) + 1
            if rf > 0:
                segments.append((0, rf - 1))
            if rf < x:
                segments.append((rf + 1, x))
        else:
            segments.append((0, x))
        committed = []
        q = fail[x]
        while segments:
            if q == 0:
                committed.extend((a, b, 1) for a, b in segments)
                break
            k, ell = rep[q]  # rep pair of prefix q+1
            base = x - q  # window position d maps to pattern position base+d
            # class r passes iff its virtual value lies in (w1, w2)
            if k is None:
                lo = 0
            else:
                lo = bisect_left(vals2, d2[base + k]) + 1
            if ell is None:
                hi = x
            else:
                hi = bisect_left(vals2, d2[base + ell])
            remaining = []
            for a, b in segments:
                ca = a if a > lo else lo
                cb = b if b < hi else hi
                if ca <= cb:
                    committed.append((ca, cb, q + 1))
                    if a < ca:
                        remaining.append((a, ca - 1))
                    if cb < b:
                        remaining.append((cb + 1, b))
                else:
                    remaining.append((a, b))
            segments = remaining
            q = fail[q]
        committed.sort(key=lambda it: (x - it[2], it[0]))
        return [
            IntervalTransition(None if a == 0 else positions[a - 1],
                               None if b == x else positions[b],
                               target)
            for a, b, target in committed
        ]


def build_forward(a: MpAutomaton) -> ForwardAutomaton:
    """Expand every state's backward transitions up front."""
    fa = ForwardAutomaton(a, lazy=False)
    d2 = fa._d2
    vals2: list = []
    positions: list = []
    for x in range(1, fa.m + 1):
        idx = bisect_left(vals2, d2[x])
        vals2.insert(idx, d2[x])
        positions.insert(idx, x)
        fa._backward[x] = fa._state_transitions(x, vals2, positions)
    return fa


def build_forward_lazy(a: MpAutomaton) -> ForwardAutomaton:
    """Defer each state's backward transitions until a search needs them."""
    return ForwardAutomaton(a, lazy=True)


def forward_search(f: ForwardAutomaton, t: Sequence[int]):
    """All occurrences of the automaton's pattern in t, with statistics.

    Each symbol first tries the forward transition, then the backward
    transitions of the current state in increasing jump order; exactly one
    transition accepts and consumes the symbol.  transitions_taken counts
    every interval test and never exceeds 2n.
    """
    m = f.m
    n = len(t)
    if m > n:
        raise PatternLongerThanText(f"pattern length {m} exceeds text length {n}")
    reps = f._rep0
    backward_for = f.backward_for
    x = 0
    trans = 0
    out = []
    for i0 in range(n):
        c = t[i0]
        base = i0 - x
        if x < m:
            x1, x2 = reps[x]
            trans += 1
            if (x1 is None or t[base + x1] < c) and (x2 is None or c < t[base + x2]):
                x += 1
                if x == m:
                    out.append(Occurrence(i0 - m + 2))
                continue
        for low, high, target in backward_for(x):
            trans += 1
            if (low is None or t[base + low - 1] < c) and \
               (high is None or c < t[base + high - 1]):
                x = target
                break
        else:  # pragma: no cover - classes cover every order class
            raise AssertionError("no transition accepted a distinct symbol")
        if x == m:
            out.append(Occurrence(i0 - m + 2))
    return out, SearchStats(symbols_read=n, transitions_taken=trans)
