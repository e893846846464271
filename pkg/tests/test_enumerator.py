"""The driver loop: ordering, counters, and space release."""

import math
import random

import pytest

from conftest import rand_pair
from lcs_enum import MatchView, LcsEnumerator, enumerate_all, \
    iter_lcs_positions
from lcs_enum.oracle import all_lcs_position_sequences

X1 = "acddadacbcb"
Y1 = "caccbaadcad"

EXAMPLE_SEQUENCES = [
    (1, 2, 3, 4, 5),
    (1, 2, 3, 5, 9),
    (2, 3, 4, 5, 9),
    (2, 3, 6, 7, 9),
    (2, 3, 6, 8, 9),
    (2, 3, 6, 8, 10),
    (2, 3, 8, 10, 11),
]
EXAMPLE_STRINGS = ["caccb", "cacbc", "accbc", "acaac", "acadc", "acada",
                   "acdad"]


def test_worked_example_order_and_strings():
    enum = LcsEnumerator(MatchView(X1, Y1))
    got = list(enum)
    assert got == EXAMPLE_SEQUENCES
    assert [enum.view.y_slice(p) for p in got] == EXAMPLE_STRINGS


def test_exhaustion_is_sticky():
    enum = LcsEnumerator(MatchView(X1, Y1))
    for _ in range(7):
        assert enum.next_sequence() is not None
    assert enum.next_sequence() is None
    assert enum.next_sequence() is None
    assert enum.finished


def test_single_lcs_cases():
    assert list(iter_lcs_positions("a", "a")) == [(1,)]
    assert list(iter_lcs_positions("a", "aa")) == [(1,)]
    assert list(iter_lcs_positions("ab", "ab")) == [(1, 2)]


def test_no_common_character_emits_one_empty_sequence():
    assert list(iter_lcs_positions("a", "b")) == [()]
    assert list(iter_lcs_positions("abab", "cdcd")) == [()]


def test_rejects_empty_input():
    with pytest.raises(ValueError):
        LcsEnumerator(MatchView("", "abc"))
    with pytest.raises(ValueError):
        LcsEnumerator(MatchView("abc", ""))


def test_enumerate_all_counts():
    assert enumerate_all(MatchView(X1, Y1), lambda p: None) == 7
    assert enumerate_all(MatchView("abc", "abc"), lambda p: None) == 1


def test_enumerate_all_sink_order():
    seen = []
    enumerate_all(MatchView(X1, Y1), seen.append)
    assert seen == EXAMPLE_SEQUENCES


def test_matches_oracle_on_random_instances():
    rng = random.Random(301)
    for _ in range(500):
        x, y = rand_pair(rng, 12)
        got = list(iter_lcs_positions(x, y))
        want = all_lcs_position_sequences(MatchView(x, y))
        assert got == want, (x, y)


def test_outputs_strictly_increase():
    rng = random.Random(302)
    for _ in range(300):
        x, y = rand_pair(rng, 12, sigmas=(2, 4))
        got = list(iter_lcs_positions(x, y))
        assert all(a < b for a, b in zip(got, got[1:]))


def test_enumerations_are_independent():
    view = MatchView(X1, Y1)
    a = LcsEnumerator(view)
    b = LcsEnumerator(view)
    a.next_sequence()
    a.next_sequence()
    assert b.next_sequence() == EXAMPLE_SEQUENCES[0]
    assert a.counters.outputs_emitted == 2
    assert b.counters.outputs_emitted == 1
    # the shared original view's own meter saw none of it
    assert view.meter.eq_queries == 0


# --- instrumentation ----------------------------------------------------

def test_counters_on_example():
    enum = LcsEnumerator(MatchView(X1, Y1))
    list(enum)
    c = enum.counters
    assert c.outputs_emitted == 7
    assert c.gaps_closed == 8           # seven outputs plus the final search
    assert c.eq_queries_this_delay == 0  # nothing after the last gap closed
    assert c.max_delay >= 1
    assert c.delay_total == c.eq_queries_total
    assert 0 < c.mean_delay <= c.max_delay


def test_delay_never_exceeds_quadratic_bound():
    rng = random.Random(303)
    for _ in range(300):
        x, y = rand_pair(rng, 14)
        enum = LcsEnumerator(MatchView(x, y))
        list(enum)
        assert enum.counters.max_delay <= 4 * len(x) * len(y), (x, y)


def test_peak_cells_within_linear_bound():
    rng = random.Random(304)
    for _ in range(300):
        x, y = rand_pair(rng, 20)
        enum = LcsEnumerator(MatchView(x, y))
        first = enum.next_sequence()
        list(enum)
        bound = 16 * (len(first) + 1) + 8 * (math.ceil(math.log2(len(x))) + 1
                                             if len(x) > 1 else 1)
        assert enum.counters.peak_aux_cells <= bound, (x, y)


def test_all_cells_released_after_exhaustion():
    rng = random.Random(305)
    for _ in range(200):
        x, y = rand_pair(rng, 12)
        enum = LcsEnumerator(MatchView(x, y))
        list(enum)
        assert enum.view.meter.live_cells == 0


def test_eq_queries_this_delay_resets_per_output():
    enum = LcsEnumerator(MatchView(X1, Y1))
    seen = []
    while enum.next_sequence() is not None:
        seen.append(enum.counters.eq_queries_this_delay)
    # right after an output the gap counter has been restarted, so it
    # only holds the probes of the branch search that already ran
    assert all(v >= 0 for v in seen)
    assert enum.counters.delay_total == enum.counters.eq_queries_total
