"""Quadratic-space reference answers for cross-checking the enumerator.

Everything here is deliberately naive: a full DP length table, a
memoized traceback that collects the set of distinct LCS strings, and
an even slower generator that tries every index combination. The two
disagree-by-construction implementations exist so the fast enumerator
can be validated against answers produced two independent ways.

Canonical form matches the enumerator's: each distinct LCS string is
reported once, as the positions of its leftmost embedding into Y, and
the sequences are sorted lexicographically. Oracle storage is not
charged to the view's cell meter (only probes are counted, and only
because `eq` always counts); it exists to be correct, not frugal.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .core import MatchView

# Beyond these sizes the distinct-LCS set can explode; the guards keep
# accidental misuse from looking like a hang.
_MAX_TRACEBACK_LEN = 14
_MAX_EXHAUSTIVE_LEN = 10


def dp_table(view: MatchView) -> list[list[int]]:
    """(len_x+1) x (len_y+1) table t, t[i][j] = L(X[1..i], Y[1..j])."""
    m, n = view.len_x, view.len_y
    t = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        row, above = t[i], t[i - 1]
        for j in range(1, n + 1):
            if view.eq(i, j):
                row[j] = above[j - 1] + 1
            else:
                row[j] = above[j] if above[j] >= row[j - 1] else row[j - 1]
    return t


def lcs_length(view: MatchView) -> int:
    return dp_table(view)[view.len_x][view.len_y]


def _leftmost_embedding(view: MatchView, chars: tuple) -> tuple[int, ...]:
    positions = []
    j = 0
    for c in chars:
        j += 1
        while view.y_char(j) != c:
            j += 1
        positions.append(j)
    return tuple(positions)


def all_lcs_position_sequences(view: MatchView) -> list[tuple[int, ...]]:
    """All distinct LCSs as leftmost Y-position tuples, sorted."""
    if max(view.len_x, view.len_y) > _MAX_TRACEBACK_LEN:
        raise ValueError(
            f"oracle traceback limited to inputs of length "
            f"{_MAX_TRACEBACK_LEN}")
    t = dp_table(view)

    @lru_cache(maxsize=None)
    def strings(i: int, j: int) -> frozenset:
        # Distinct LCS strings of X[1..i], Y[1..j], as char tuples.
        if t[i][j] == 0:
            return frozenset({()})
        out = set()
        if i > 0 and j > 0 and view.eq(i, j):
            c = view.y_char(j)
            out.update(s + (c,) for s in strings(i - 1, j - 1))
        if i > 0 and t[i - 1][j] == t[i][j]:
            out.update(strings(i - 1, j))
        if j > 0 and t[i][j - 1] == t[i][j]:
            out.update(strings(i, j - 1))
        return frozenset(out)

    all_strings = strings(view.len_x, view.len_y)
    strings.cache_clear()
    return sorted(_leftmost_embedding(view, s) for s in all_strings)


def all_distinct_lcs_strings(view: MatchView) -> list:
    """The rendered LCS strings, in the same order as the position tuples."""
    return [view.y_slice(p) for p in all_lcs_position_sequences(view)]


def exhaustive_lcs_position_sequences(view: MatchView) -> list[tuple[int, ...]]:
    """Same answer as :func:`all_lcs_position_sequences`, even more naively.

    Tries every combination of L positions of Y, keeps those whose
    characters form a subsequence of X, and dedupes by string. Shares
    no traceback logic with the other oracle.
    """
    if max(view.len_x, view.len_y) > _MAX_EXHAUSTIVE_LEN:
        raise ValueError(
            f"exhaustive oracle limited to inputs of length "
            f"{_MAX_EXHAUSTIVE_LEN}")
    length = lcs_length(view)
    if length == 0:
        return [()]
    seen = set()
    for combo in combinations(range(1, view.len_y + 1), length):
        chars = tuple(view.y_char(j) for j in combo)
        if chars in seen:
            continue
        # Two-pointer subsequence-of-X check.
        i = 0
        ok = True
        for j in combo:
            i += 1
            while i <= view.len_x and not view.eq(i, j):
                i += 1
            if i > view.len_x:
                ok = False
                break
        if ok:
            seen.add(chars)
    return sorted(_leftmost_embedding(view, s) for s in seen)
