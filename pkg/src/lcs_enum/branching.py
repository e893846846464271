"""Find where the successor of an output position sequence branches off.

Given the position sequence P that was just emitted, ``find_branch``
locates the pair (k*, j*): the successor of P in the enumeration order
agrees with P before position k*, holds j* at position k*, and is the
leftmost continuation afterwards. If no successor exists, P was the
final output.

The search walks k from |P| down to 1. For each k it tries every
replacement j* > P[k] in increasing order and asks two things: can
Y[P[1..k-1]] followed by Y[j*] still be embedded with the greedy
leftmost rule (ending at some X position at or before the current scan
frontier i*), and do the remaining inputs after that embedding still
admit |P| - k more common characters? The first question is answered by
scanning X for a match; the second by a suffix threshold sequence for
X[i*+1..] against all of Y, maintained incrementally: every time i*
moves one step left, one in-place fold (``dec_i``) refreshes it in
O(|Y|) probes. i* never moves right, so a whole call performs at most
|X| folds and O(|X| * |Y|) probes overall while keeping O(L) integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import MatchView
from .hirschberg import _fold_suffix_row

_FRAME_CELLS = 6


class BranchPoint(NamedTuple):
    k_star: int  # 1-based position within P where the successor departs
    j_star: int  # the successor's Y index at that position


@dataclass(slots=True)
class BranchState:
    """Mutable scan state: greedy embedding, X frontier, suffix thresholds.

    ``q[k]`` is the least X position whose prefix embeds Y[P[1..k]]
    (sentinel q[0] = 0). ``j_suffix[l - 1]`` is the greatest j with
    L(X[i_star+1..], Y[j..]) = l.
    """

    q: list[int]
    i_star: int
    j_suffix: list[int]


def greedy_embedding(view: MatchView, positions: Sequence[int]) -> list[int]:
    """Leftmost X positions embedding Y[positions], one scan of X.

    Raises ValueError if Y[positions] is not a subsequence of X, which
    inside the enumerator would mean corrupted state.
    """
    q: list[int] = []
    i = 0
    for j in positions:
        nxt = view.next_x_match(j, i + 1, view.len_x)
        if nxt is None:
            raise ValueError("sequence does not embed into the first input")
        q.append(nxt)
        i = nxt
    return q


def dec_i(view: MatchView, state: BranchState) -> None:
    """Move the X frontier one step left and refold the suffix thresholds.

    Requires state.i_star >= 1. One O(|Y|) pass incorporates the
    character X[i_star] (the new head of the X suffix) into j_suffix.
    """
    state.i_star -= 1
    _fold_suffix_row(view, state.i_star + 1, 1, view.len_y, state.j_suffix)


def find_branch(view: MatchView, positions: Sequence[int]) -> BranchPoint | None:
    """Branch point of the successor of ``positions``, or None if it is last.

    ``positions`` must be an output of the enumeration (leftmost
    canonical LCS positions); behaviour is unspecified otherwise.
    """
    meter = view.meter
    length = len(positions)
    meter.grow(_FRAME_CELLS + 1)
    q = [0]
    state = BranchState(q=q, i_star=view.len_x, j_suffix=[])
    try:
        i = 0
        for j in positions:
            nxt = view.next_x_match(j, i + 1, view.len_x)
            if nxt is None:
                raise ValueError("sequence does not embed into the first input")
            q.append(nxt)
            meter.grow(1)
            i = nxt

        for k in range(length, 0, -1):
            while state.i_star >= q[k]:
                dec_i(view, state)
            base = q[k - 1]
            for j_star in range(positions[k - 1] + 1, view.len_y + 1):
                hit = view.next_x_match(j_star, base + 1, state.i_star)
                if hit is None:
                    continue
                while state.i_star > hit:
                    dec_i(view, state)
                # Residual check: the inputs after (i_star, j_star) must
                # reach level length - k. Testing >= is enough; more would
                # contradict L being the LCS length.
                need = length - k
                if need == 0 or (len(state.j_suffix) >= need
                                 and j_star + 1 <= state.j_suffix[need - 1]):
                    return BranchPoint(k, j_star)
                # Larger i*, j* pairs cannot help once this one failed.
                dec_i(view, state)
        return None
    finally:
        meter.shrink(_FRAME_CELLS + len(q) + len(state.j_suffix))
