"""Input access model, index conventions, and shared value types.

All indices are 1-based at module boundaries: position i refers to X[i],
position j to Y[j], matching the usual string-algorithm convention. An
LCS occurrence is represented as a strictly increasing tuple of 1-based
positions into Y (the "position sequence"); the string itself is
recovered by reading Y at those positions.

The two inputs are wrapped in a :class:`MatchView`, which exposes only
their lengths, positionwise equality queries X[i] == Y[j], and read
access to Y (needed to render output strings). Algorithms built on top
of the view never touch the raw inputs, so the view can be backed by
str, bytes, or token lists without copying, and the attached
:class:`Meter` can account for every equality probe.

Besides single queries, the view offers scan primitives (first/last
match in a range). Each primitive charges the meter for exactly the
probes a sequential left-to-right (or right-to-left) scan with early
exit would perform, so query counts are identical to a naive
character-by-character implementation while str/bytes-backed views get
C-speed scanning via find/rfind.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class Meter:
    """Running totals for equality probes and live auxiliary index cells.

    ``eq_queries`` counts positionwise equality probes and only ever
    grows. ``live_cells`` tracks the number of auxiliary integer cells
    (threshold levels, embeddings, output buffers, recursion frames)
    currently allocated by the algorithms; ``peak_cells`` records its
    high-water mark. Inputs, outputs handed to the caller, and the
    quadratic reference oracle are outside the accounting scope.
    """

    __slots__ = ("eq_queries", "live_cells", "peak_cells")

    def __init__(self) -> None:
        self.eq_queries = 0
        self.live_cells = 0
        self.peak_cells = 0

    def grow(self, n: int = 1) -> None:
        self.live_cells += n
        if self.live_cells > self.peak_cells:
            self.peak_cells = self.live_cells

    def shrink(self, n: int = 1) -> None:
        self.live_cells -= n
        if self.live_cells < 0:
            raise RuntimeError("cell accounting went negative (allocation bug)")

    def __repr__(self) -> str:
        return (f"Meter(eq_queries={self.eq_queries}, "
                f"live_cells={self.live_cells}, peak_cells={self.peak_cells})")


class MatchView:
    """Read-only view of an input pair (X, Y) with metered access.

    Equality queries are pure: the answer to (i, j) never changes over
    the lifetime of the view. Concurrent read-only use is fine, but the
    meter is a plain counter; give each thread its own view via
    :meth:`with_meter` if per-thread counts matter.
    """

    __slots__ = ("_x", "_y", "len_x", "len_y", "meter", "_fast")

    def __init__(self, x: Sequence, y: Sequence, meter: Meter | None = None):
        self._x = x
        self._y = y
        self.len_x = len(x)
        self.len_y = len(y)
        self.meter = meter if meter is not None else Meter()
        self._fast = (isinstance(x, str) and isinstance(y, str)) or (
            isinstance(x, bytes) and isinstance(y, bytes))

    def with_meter(self, meter: Meter) -> "MatchView":
        """Same underlying inputs, separate instrumentation."""
        return MatchView(self._x, self._y, meter)

    def eq(self, i: int, j: int) -> bool:
        """Whether X[i] == Y[j]. One metered probe."""
        if not (1 <= i <= self.len_x and 1 <= j <= self.len_y):
            raise IndexError(f"eq({i}, {j}) outside 1..{self.len_x} x 1..{self.len_y}")
        self.meter.eq_queries += 1
        return self._x[i - 1] == self._y[j - 1]

    def y_char(self, j: int):
        """The element Y[j] (used only to render outputs)."""
        if not 1 <= j <= self.len_y:
            raise IndexError(f"y_char({j}) outside 1..{self.len_y}")
        return self._y[j - 1]

    def y_slice(self, positions: Sequence[int]):
        """Y read at the given positions, in Y's own type (str/bytes/tuple)."""
        y = self._y
        if isinstance(y, str):
            return "".join(y[j - 1] for j in positions)
        if isinstance(y, bytes):
            return bytes(y[j - 1] for j in positions)
        return tuple(y[j - 1] for j in positions)

    # Scan primitives. Each charges the meter for the probes a sequential
    # scan with early exit would make; a full-range walk by repeated calls
    # telescopes to exactly one probe per position, the same as scanning
    # the whole range once.

    def next_y_match(self, i: int, j_lo: int, j_hi: int) -> int | None:
        """Least j in [j_lo, j_hi] with X[i] == Y[j], scanning upward."""
        if j_lo > j_hi:
            return None
        if not (1 <= i <= self.len_x and 1 <= j_lo and j_hi <= self.len_y):
            raise IndexError(f"next_y_match({i}, {j_lo}, {j_hi}) out of range")
        if self._fast:
            k = self._y.find(self._x[i - 1], j_lo - 1, j_hi)
            if k < 0:
                self.meter.eq_queries += j_hi - j_lo + 1
                return None
            self.meter.eq_queries += k + 2 - j_lo
            return k + 1
        xi = self._x[i - 1]
        m = self.meter
        for j in range(j_lo, j_hi + 1):
            m.eq_queries += 1
            if xi == self._y[j - 1]:
                return j
        return None

    def prev_y_match(self, i: int, j_lo: int, j_hi: int) -> int | None:
        """Greatest j in [j_lo, j_hi] with X[i] == Y[j], scanning downward."""
        if j_lo > j_hi:
            return None
        if not (1 <= i <= self.len_x and 1 <= j_lo and j_hi <= self.len_y):
            raise IndexError(f"prev_y_match({i}, {j_lo}, {j_hi}) out of range")
        if self._fast:
            k = self._y.rfind(self._x[i - 1], j_lo - 1, j_hi)
            if k < 0:
                self.meter.eq_queries += j_hi - j_lo + 1
                return None
            self.meter.eq_queries += j_hi - k
            return k + 1
        xi = self._x[i - 1]
        m = self.meter
        for j in range(j_hi, j_lo - 1, -1):
            m.eq_queries += 1
            if xi == self._y[j - 1]:
                return j
        return None

    def next_x_match(self, j: int, i_lo: int, i_hi: int) -> int | None:
        """Least i in [i_lo, i_hi] with X[i] == Y[j], scanning upward."""
        if i_lo > i_hi:
            return None
        if not (1 <= j <= self.len_y and 1 <= i_lo and i_hi <= self.len_x):
            raise IndexError(f"next_x_match({j}, {i_lo}, {i_hi}) out of range")
        if self._fast:
            k = self._x.find(self._y[j - 1], i_lo - 1, i_hi)
            if k < 0:
                self.meter.eq_queries += i_hi - i_lo + 1
                return None
            self.meter.eq_queries += k + 2 - i_lo
            return k + 1
        yj = self._y[j - 1]
        m = self.meter
        for i in range(i_lo, i_hi + 1):
            m.eq_queries += 1
            if self._x[i - 1] == yj:
                return i
        return None

    def __repr__(self) -> str:
        return f"MatchView(len_x={self.len_x}, len_y={self.len_y})"


@dataclass(frozen=True, slots=True)
class IndexRange:
    """1-based inclusive range [lo, hi]; hi == lo - 1 encodes the empty range."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 1 or self.hi < self.lo - 1:
            raise ValueError(f"invalid range [{self.lo}, {self.hi}]")

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    @property
    def is_empty(self) -> bool:
        return self.hi < self.lo

    @classmethod
    def full(cls, n: int) -> "IndexRange":
        return cls(1, n)


def char_eq(view: MatchView, i: int, j: int) -> bool:
    """Whether X[i] == Y[j] under the view (1-based, bounds-checked)."""
    return view.eq(i, j)


def render(view: MatchView, positions: Sequence[int]):
    """The subsequence Y[positions] as a string (or bytes/tuple for such views)."""
    return view.y_slice(positions)


def is_valid_position_sequence(view: MatchView, positions: Sequence[int]) -> bool:
    """Strictly increasing and within [1, len_y]."""
    prev = 0
    for j in positions:
        if j <= prev or j > view.len_y:
            return False
        prev = j
    return True
