"""Stream every distinct LCS of two strings in lexicographic order.

Each distinct longest common subsequence is emitted exactly once, as
the strictly increasing tuple of 1-based Y positions of its leftmost
occurrence, and outputs arrive in lexicographic order of those tuples.
The work between two consecutive outputs is O(len_x * len_y) equality
probes and the auxiliary state is O(L) integers plus O(log len_x)
recursion bookkeeping, however many outputs there are.

One iteration: keep the prefix of the current buffer up to the branch
index found after the previous output, append the leftmost LCS of what
remains of both inputs past that prefix, emit, then search for the next
branch point. The instrumentation counters close one "delay" per
emitted output and a final one when exhaustion is detected, so the
probe counts of every gap (before the first output, between outputs,
after the last) are observable.

    >>> from lcs_enum import MatchView, LcsEnumerator
    >>> list(LcsEnumerator(MatchView("ab", "ab")))
    [(1, 2)]
"""

from __future__ import annotations

from typing import Callable, Sequence

from .core import MatchView, Meter
from .branching import find_branch
from .hirschberg import _first_lcs_into


class Counters:
    """Per-enumeration instrumentation: probe gaps, peak cells, outputs."""

    __slots__ = ("_meter", "_mark", "outputs_emitted", "max_delay",
                 "delay_total", "gaps_closed")

    def __init__(self, meter: Meter):
        self._meter = meter
        self._mark = 0
        self.outputs_emitted = 0
        self.max_delay = 0
        self.delay_total = 0
        self.gaps_closed = 0

    @property
    def eq_queries_this_delay(self) -> int:
        """Probes since the previous output (or since the start)."""
        return self._meter.eq_queries - self._mark

    @property
    def eq_queries_total(self) -> int:
        return self._meter.eq_queries

    @property
    def peak_aux_cells(self) -> int:
        return self._meter.peak_cells

    @property
    def mean_delay(self) -> float:
        return self.delay_total / self.gaps_closed if self.gaps_closed else 0.0

    def _close_gap(self) -> None:
        gap = self._meter.eq_queries - self._mark
        self._mark = self._meter.eq_queries
        self.gaps_closed += 1
        self.delay_total += gap
        if gap > self.max_delay:
            self.max_delay = gap


class LcsEnumerator:
    """Pull-based enumeration of all distinct LCS position sequences.

    Owns a private meter (the given view is re-wrapped, so independent
    enumerations over one view do not share counters). Call
    :meth:`next_sequence` for one output at a time, or iterate. When
    the inputs share no character the single output is the empty tuple,
    the unique (empty) LCS.
    """

    def __init__(self, view: MatchView):
        if view.len_x < 1 or view.len_y < 1:
            raise ValueError("enumeration needs two non-empty inputs")
        self._view = view.with_meter(Meter())
        self.counters = Counters(self._view.meter)
        self._p: list[int] = []
        self._k_star = 0
        self._finished = False

    @property
    def view(self) -> MatchView:
        """The metered view this enumeration runs on."""
        return self._view

    @property
    def finished(self) -> bool:
        return self._finished

    def next_sequence(self) -> tuple[int, ...] | None:
        """The next position sequence, or None after the last one."""
        if self._finished:
            return None
        view = self._view
        meter = view.meter
        p = self._p
        k = self._k_star

        # Frontier after the kept prefix: the greedy embedding end for X,
        # the prefix's own last position for Y (the prefix is leftmost
        # canonical, so Y[1..p[k]] is already the shortest prefix).
        i = 0
        for idx in range(k):
            nxt = view.next_x_match(p[idx], i + 1, view.len_x)
            if nxt is None:
                raise RuntimeError("enumerator state lost embeddability")
            i = nxt
        j = p[k - 1] if k > 0 else 0

        meter.shrink(len(p) - k)
        del p[k:]
        _first_lcs_into(view, i + 1, view.len_x, j + 1, view.len_y, p)
        out = tuple(p)
        self.counters.outputs_emitted += 1
        self.counters._close_gap()

        branch = find_branch(view, p)
        if branch is None:
            self._finished = True
            meter.shrink(len(p))
            p.clear()
            self.counters._close_gap()  # trailing gap: the final search
        else:
            self._k_star = branch.k_star
            p[branch.k_star - 1] = branch.j_star
        return out

    def __iter__(self):
        return self

    def __next__(self) -> tuple[int, ...]:
        out = self.next_sequence()
        if out is None:
            raise StopIteration
        return out


def enumerate_all(view: MatchView,
                  sink: Callable[[tuple[int, ...]], object]) -> int:
    """Push every position sequence to ``sink`` in order; return the count."""
    enum = LcsEnumerator(view)
    n = 0
    while (p := enum.next_sequence()) is not None:
        sink(p)
        n += 1
    return n


def iter_lcs_positions(x: Sequence, y: Sequence):
    """Convenience wrapper: yield the position sequences for plain inputs."""
    return LcsEnumerator(MatchView(x, y))
