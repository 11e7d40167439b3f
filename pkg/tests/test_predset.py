"""Predecessor set: contract examples, errors, and reference equivalence."""

from __future__ import annotations

import bisect
import random

import pytest

from opmatch.predset import (KeyAbsent, KeyOutOfUniverse, KeyPresent, PredSet)


def test_self_predecessor_convention():
    s = PredSet(10)
    s.insert(5, "p")
    pred, succ = s.query(5)
    assert pred == (5, "p")
    assert succ is None


def test_between_two_keys():
    s = PredSet(10)
    s.insert(3, "a")
    s.insert(9, "b")
    assert s.query(7) == ((3, "a"), (9, "b"))


def test_full_capacity_insert():
    u = 300
    s = PredSet(u)
    for k in range(1, u + 1):
        s.insert(k, -k)
    assert len(s) == u
    assert s.query(u) == ((u, -u), None)


def test_delete_then_empty_query():
    s = PredSet(8)
    s.insert(4, None)
    s.delete(4)
    assert s.query(4) == (None, None)


def test_delete_leaves_rest():
    s = PredSet(16)
    s.insert(2, "x")
    s.insert(6, "y")
    s.delete(6)
    assert s.query(9) == ((2, "x"), None)


def test_strict_query_skips_equal_key():
    s = PredSet(4)
    for k in (1, 2, 3):
        s.insert(k, k * 10)
    assert s.query_strict(2) == ((1, 10), (3, 30))


def test_strict_query_single_key():
    s = PredSet(16)
    s.insert(10, "only")
    assert s.query_strict(10) == (None, None)


def test_error_cases():
    s = PredSet(5)
    s.insert(3, None)
    with pytest.raises(KeyPresent):
        s.insert(3, None)
    with pytest.raises(KeyAbsent):
        s.delete(4)
    with pytest.raises(KeyOutOfUniverse):
        s.insert(6, None)
    with pytest.raises(KeyOutOfUniverse):
        s.insert(0, None)
    with pytest.raises(KeyOutOfUniverse):
        s.query(6)
    with pytest.raises(ValueError):
        PredSet(0)


def test_query_does_not_mutate():
    s = PredSet(64)
    s.insert(17, "a")
    before = (len(s), 17 in s)
    s.query(17)
    s.query_strict(40)
    assert (len(s), 17 in s) == before


def test_ops_counter_counts_every_operation():
    s = PredSet(8)
    s.insert(1, None)
    s.query(1)
    s.query_strict(1)
    s.delete(1)
    assert s.ops == 4


def test_word_boundaries():
    # keys around 64-bit word edges exercise the summary level
    s = PredSet(200)
    for k in (1, 63, 64, 65, 128, 129, 200):
        s.insert(k, k)
    assert s.query(62) == ((1, 1), (63, 63))
    assert s.query(64) == ((64, 64), (65, 65))
    assert s.query_strict(128) == ((65, 65), (129, 129))
    assert s.query(200) == ((200, 200), None)
    s.delete(64)
    assert s.query(64) == ((63, 63), (65, 65))


def test_randomized_equivalence_with_sorted_list():
    rng = random.Random(20)
    universe = 10_000
    s = PredSet(universe)
    keys: list = []
    payload: dict = {}
    for step in range(100_000):
        roll = rng.random()
        if roll < 0.35:
            k = rng.randint(1, universe)
            if k in payload:
                with pytest.raises(KeyPresent):
                    s.insert(k, step)
            else:
                s.insert(k, step)
                bisect.insort(keys, k)
                payload[k] = step
        elif roll < 0.55 and keys:
            k = rng.choice(keys) if rng.random() < 0.8 else rng.randint(1, universe)
            if k in payload:
                s.delete(k)
                keys.remove(k)
                del payload[k]
            else:
                with pytest.raises(KeyAbsent):
                    s.delete(k)
        else:
            y = rng.randint(1, universe)
            i = bisect.bisect_right(keys, y)
            want_succ = None if i == len(keys) else (keys[i], payload[keys[i]])
            j = bisect.bisect_right(keys, y)
            want_pred = None if j == 0 else (keys[j - 1], payload[keys[j - 1]])
            assert s.query(y) == (want_pred, want_succ)
            js = bisect.bisect_left(keys, y)
            want_pred_s = None if js == 0 else (keys[js - 1], payload[keys[js - 1]])
            assert s.query_strict(y) == (want_pred_s, want_succ)
    assert len(s) == len(keys)
