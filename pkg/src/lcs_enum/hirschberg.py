"""Lexicographically first LCS occurrence in linear auxiliary space.

``first_lcs`` returns the leftmost position sequence of a longest
common subsequence of X[xr] and Y[yr]: the unique occurrence P such
that every prefix Y[..P[k]] is the shortest one containing the first k
chosen characters, and among all such canonical occurrences P is the
lexicographically least. It runs in O(|xr| * |yr|) equality probes but
keeps only O(L) integers alive at any moment (L = LCS length), plus
O(log |xr|) recursion bookkeeping.

The method is divide and conquer on X. Split X at its midpoint, then
find where to split Y so the two halves' LCS lengths add up to the
total. Each half's reachable LCS levels are summarized by a threshold
sequence:

  prefix orientation:  level p -> least j with L(X_half, Y[yr.lo..j]) = p
  suffix orientation:  level q -> greatest j with L(X_half, Y[j..yr.hi]) = q

Both are built one X character at a time by an in-place fold that walks
the match positions of that character inside the Y range; a length-n
row costs exactly n equality probes. One joint scan of the two
sequences then yields the Y split. Unlike the classic linear-space LCS
construction, which may pick any maximizing split, the scan keeps the
least maximizer; this is what makes the leftmost occurrence of the
whole problem equal the concatenation of the leftmost occurrences of
the two halves, so plain left-to-right recursion emits it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import IndexRange, MatchView

# One live recursion frame holds the two range endpoints plus the split
# pair; counted so the O(log n) bookkeeping shows up in the cell meter.
_FRAME_CELLS = 6


@dataclass(frozen=True, slots=True)
class ThresholdSequence:
    """LCS level thresholds for one X part against one Y range.

    ``values[p - 1]`` is the threshold for level p. Prefix orientation is
    strictly increasing (least j reaching each level), suffix orientation
    strictly decreasing (greatest starting j reaching each level); the
    number of levels equals the LCS length of the pair.
    """

    values: tuple[int, ...]
    orientation: str  # "prefix" or "suffix"

    def __len__(self) -> int:
        return len(self.values)


class SplitResult(NamedTuple):
    x_mid: int
    y_mid: int  # may equal yr.lo - 1: the left Y part is empty


def _fold_prefix_row(view: MatchView, i: int, j_lo: int, j_hi: int,
                     levels: list[int]) -> None:
    """Fold X[i] into prefix thresholds for Y[j_lo..j_hi], in place.

    Walks the match positions of X[i] from high j to low j. A match at j
    seen when l old thresholds lie below j becomes the new level-(l+1)
    threshold; descending order makes the least match win. In-place reads
    are safe because the walk only writes at or above the index it still
    has to read.
    """
    l = len(levels)
    hi = j_hi
    while hi >= j_lo:
        j = view.prev_y_match(i, j_lo, hi)
        if j is None:
            break
        while l > 0 and levels[l - 1] >= j:
            l -= 1
        if l == len(levels):
            levels.append(j)
            view.meter.grow(1)
        else:
            levels[l] = j
        hi = j - 1


def _fold_suffix_row(view: MatchView, i: int, j_lo: int, j_hi: int,
                     levels: list[int]) -> None:
    """Fold X[i] into suffix thresholds for Y[j_lo..j_hi], in place.

    Mirror image of the prefix fold: X grows leftward by one character,
    matches are walked from low j to high j, and the greatest match at
    each level wins.
    """
    l = len(levels)
    lo = j_lo
    while lo <= j_hi:
        j = view.next_y_match(i, lo, j_hi)
        if j is None:
            break
        while l > 0 and levels[l - 1] <= j:
            l -= 1
        if l == len(levels):
            levels.append(j)
            view.meter.grow(1)
        else:
            levels[l] = j
        lo = j + 1


def _split(view: MatchView, i_lo: int, i_hi: int, j_lo: int, j_hi: int
           ) -> tuple[int, int]:
    """Midpoint of X and the least Y split whose half-LCS lengths sum to L.

    Requires i_lo < i_hi. Builds both threshold sequences, scans Y once
    keeping the current prefix level l_lo and remaining suffix level l_hi,
    and replaces the best split only on strict improvement, so the least
    maximizer survives. Both sequences are released before returning.
    """
    meter = view.meter
    i_mid = (i_lo + i_hi) // 2

    lo_levels: list[int] = []
    for i in range(i_lo, i_mid + 1):
        _fold_prefix_row(view, i, j_lo, j_hi, lo_levels)
    hi_levels: list[int] = []
    for i in range(i_hi, i_mid, -1):
        _fold_suffix_row(view, i, j_lo, j_hi, hi_levels)

    l_lo = 0
    l_hi = len(hi_levels)
    best = l_lo + l_hi
    j_mid = j_lo - 1
    for j in range(j_lo, j_hi + 1):
        if l_lo < len(lo_levels) and lo_levels[l_lo] <= j:
            l_lo += 1
        if l_hi > 0 and hi_levels[l_hi - 1] <= j:
            l_hi -= 1
        if l_lo + l_hi > best:
            j_mid = j
            best = l_lo + l_hi

    meter.shrink(len(lo_levels) + len(hi_levels))
    return i_mid, j_mid


def _first_lcs_into(view: MatchView, i_lo: int, i_hi: int, j_lo: int,
                    j_hi: int, out: list[int]) -> None:
    """Append the leftmost LCS positions of X[i_lo..i_hi], Y[j_lo..j_hi].

    Appends are in left-to-right output order and each is charged to the
    meter; the caller owns the buffer. Single-character X: linear scan
    for the least match. Otherwise split, recurse left, recurse right.
    """
    meter = view.meter
    meter.grow(_FRAME_CELLS)
    try:
        if i_lo > i_hi or j_lo > j_hi:
            return
        if i_lo == i_hi:
            j = view.next_y_match(i_lo, j_lo, j_hi)
            if j is not None:
                out.append(j)
                meter.grow(1)
            return
        i_mid, j_mid = _split(view, i_lo, i_hi, j_lo, j_hi)
        _first_lcs_into(view, i_lo, i_mid, j_lo, j_mid, out)
        _first_lcs_into(view, i_mid + 1, i_hi, j_mid + 1, j_hi, out)
    finally:
        meter.shrink(_FRAME_CELLS)


def _resolve_ranges(view: MatchView, xr: IndexRange | None, yr: IndexRange | None
                    ) -> tuple[IndexRange, IndexRange]:
    xr = IndexRange.full(view.len_x) if xr is None else xr
    yr = IndexRange.full(view.len_y) if yr is None else yr
    if xr.hi > view.len_x or yr.hi > view.len_y:
        raise IndexError(f"range beyond view bounds: {xr}, {yr}")
    return xr, yr


def prefix_thresholds(view: MatchView, xr: IndexRange | None = None,
                      yr: IndexRange | None = None) -> ThresholdSequence:
    """Least j in yr reaching each LCS level of X[xr] versus Y[yr.lo..j]."""
    xr, yr = _resolve_ranges(view, xr, yr)
    levels: list[int] = []
    if not yr.is_empty:
        for i in range(xr.lo, xr.hi + 1):
            _fold_prefix_row(view, i, yr.lo, yr.hi, levels)
    view.meter.shrink(len(levels))
    return ThresholdSequence(tuple(levels), "prefix")


def suffix_thresholds(view: MatchView, xr: IndexRange | None = None,
                      yr: IndexRange | None = None) -> ThresholdSequence:
    """Greatest starting j in yr reaching each LCS level of X[xr] versus Y[j..yr.hi]."""
    xr, yr = _resolve_ranges(view, xr, yr)
    levels: list[int] = []
    if not yr.is_empty:
        for i in range(xr.hi, xr.lo - 1, -1):
            _fold_suffix_row(view, i, yr.lo, yr.hi, levels)
    view.meter.shrink(len(levels))
    return ThresholdSequence(tuple(levels), "suffix")


def split_point(view: MatchView, xr: IndexRange | None = None,
                yr: IndexRange | None = None) -> SplitResult:
    """Split X[xr] at its midpoint and Y[yr] at the least place that keeps
    the two halves' LCS lengths summing to the total."""
    xr, yr = _resolve_ranges(view, xr, yr)
    if xr.length < 2:
        raise ValueError("split_point needs an X range of at least two characters")
    i_mid, j_mid = _split(view, xr.lo, xr.hi, yr.lo, yr.hi)
    return SplitResult(i_mid, j_mid)


def first_lcs(view: MatchView, xr: IndexRange | None = None,
              yr: IndexRange | None = None) -> tuple[int, ...]:
    """Leftmost position sequence of an LCS of X[xr] and Y[yr].

    Positions are absolute 1-based indices into Y. Empty ranges (and
    pairs with no common character) yield the empty tuple.
    """
    xr, yr = _resolve_ranges(view, xr, yr)
    out: list[int] = []
    _first_lcs_into(view, xr.lo, xr.hi, yr.lo, yr.hi, out)
    view.meter.shrink(len(out))
    return tuple(out)
