"""2D orthogonal range emptiness over a fixed point set.

Two structures with the same query contract:

* ``StaticPointSet`` — immutable; a layered range tree (points sorted by x,
  every tree node keeps its y-values sorted).  Queries cost O(log^2 r).
* ``DynamicPointSet`` — supports deleting points (never inserting); a
  binary-indexed tree over x where each cell keeps an ordered multiset of
  y-values with live counts.  Queries and deletes cost O(log^2 r).

Coordinates are positive integers.  Duplicate points are allowed and carry
multiset semantics: deleting removes one instance.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from typing import Iterable, Sequence

import numpy as np

Point = tuple[int, int]

_SENTINEL = (1 << 31) - 1  # larger than any real coordinate we index
_NUMPY_MIN = 4096  # below this, plain lists beat ndarray call overhead


def _check_box(x_lo: int, x_hi: int, y_lo: int, y_hi: int) -> None:
    if x_lo > x_hi or y_lo > y_hi:
        raise ValueError(f"inverted box [{x_lo}..{x_hi}]x[{y_lo}..{y_hi}]")


class StaticPointSet:
    """Immutable point set answering box-emptiness queries."""

    __slots__ = ("size", "_xs", "_levels", "_pad", "_numpy")

    def __init__(self, points: Iterable[Point]):
        pts = sorted(points)
        self.size = len(pts)
        self._numpy = self.size >= _NUMPY_MIN
        if self.size == 0:
            self._xs: Sequence[int] = []
            self._levels: list = []
            self._pad = 0
            return
        for x, y in (pts[0], pts[-1]):
            if x < 1 or y < 1 or x >= _SENTINEL or y >= _SENTINEL:
                raise ValueError("coordinates must be in 1..2**31-2")
        pad = 1
        while pad < self.size:
            pad <<= 1
        self._pad = pad
        if self._numpy:
            arr = np.fromiter((c for p in pts for c in p), dtype=np.int64, count=2 * self.size)
            arr = arr.reshape(self.size, 2)
            self._xs = np.ascontiguousarray(arr[:, 0])
            base = np.full(pad, _SENTINEL, dtype=np.int32)
            base[: self.size] = arr[:, 1]
            levels = [base]
            width = 1
            while width < pad:
                width <<= 1
                levels.append(np.sort(levels[-1].reshape(-1, width), axis=1).ravel())
            self._levels = levels
        else:
            self._xs = [p[0] for p in pts]
            base = [p[1] for p in pts] + [_SENTINEL] * (pad - self.size)
            levels = [base]
            width = 1
            while width < pad:
                width <<= 1
                prev = levels[-1]
                levels.append(
                    [v for i in range(0, pad, width) for v in sorted(prev[i : i + width])]
                )
            self._levels = levels

    def box_nonempty(self, x_lo: int, x_hi: int, y_lo: int, y_hi: int) -> bool:
        """True iff some point lies in [x_lo..x_hi] x [y_lo..y_hi]."""
        _check_box(x_lo, x_hi, y_lo, y_hi)
        if self.size == 0:
            return False
        xs = self._xs
        if self._numpy:
            lo = int(np.searchsorted(xs, x_lo, side="left"))
            hi = int(np.searchsorted(xs, x_hi, side="right"))
        else:
            lo = bisect_left(xs, x_lo)
            hi = bisect_right(xs, x_hi)
        if lo >= hi:
            return False
        levels = self._levels
        lvl = 0
        l, r = lo, hi
        while l < r:
            if l & 1:
                if self._node_hits(levels[lvl], l << lvl, 1 << lvl, y_lo, y_hi):
                    return True
                l += 1
            if r & 1:
                r -= 1
                if self._node_hits(levels[lvl], r << lvl, 1 << lvl, y_lo, y_hi):
                    return True
            l >>= 1
            r >>= 1
            lvl += 1
        return False

    def _node_hits(self, level, base: int, width: int, y_lo: int, y_hi: int) -> bool:
        if self._numpy:
            seg = level[base : base + width]
            i = int(np.searchsorted(seg, y_lo, side="left"))
            return i < width and int(seg[i]) <= y_hi
        i = bisect_left(level, y_lo, base, base + width)
        return i < base + width and level[i] <= y_hi


class _Cell:
    """One BIT cell: sorted y-slots, live counts in a Fenwick tree, and a
    per-value stack of free slots so a delete touches one instance."""

    __slots__ = ("ys", "fen", "dup")

    def __init__(self, ys: list[int]):
        ys.sort()
        self.ys = ys
        n = len(ys)
        # Fenwick of all-ones: node value is the size of its range
        self.fen = [0] + [(i & -i) for i in range(1, n + 1)]
        dup: dict[int, list[int]] = {}
        for slot, y in enumerate(ys):
            dup.setdefault(y, []).append(slot)
        self.dup = dup

    def remove_one(self, y: int) -> None:
        pos = self.dup[y].pop() + 1
        fen = self.fen
        n = len(fen) - 1
        while pos <= n:
            fen[pos] -= 1
            pos += pos & -pos

    def count_range(self, y_lo: int, y_hi: int) -> int:
        ys = self.ys
        a = bisect_left(ys, y_lo)
        b = bisect_right(ys, y_hi)
        if a >= b:
            return 0
        fen = self.fen
        total = 0
        while b:
            total += fen[b]
            b -= b & -b
        while a:
            total -= fen[a]
            a -= a & -a
        return total


class DynamicPointSet:
    """Point set supporting deletion and box-emptiness, never insertion."""

    __slots__ = ("x_bound", "live", "_cells")

    def __init__(self, points: Iterable[Point], x_bound: int | None = None):
        pts = list(points)
        self.live = Counter(pts)
        xb = x_bound if x_bound is not None else max((p[0] for p in pts), default=1)
        for x, y in pts:
            if x < 1 or y < 1:
                raise ValueError("coordinates must be >= 1")
            if x > xb:
                raise ValueError(f"x={x} exceeds bound {xb}")
        self.x_bound = xb
        buckets: list[list[int]] = [[] for _ in range(xb + 1)]
        for x, y in pts:
            i = x
            while i <= xb:
                buckets[i].append(y)
                i += i & -i
        self._cells = [None] + [_Cell(b) for b in buckets[1:]]

    @property
    def live_count(self) -> int:
        return sum(self.live.values())

    def live_points(self) -> Counter:
        return Counter(self.live)

    def delete(self, x: int, y: int) -> None:
        """Remove one instance of (x, y).  Raises if it is not present."""
        if self.live[(x, y)] <= 0:
            raise ValueError(f"point ({x},{y}) not present")
        self.live[(x, y)] -= 1
        cells = self._cells
        xb = self.x_bound
        i = x
        while i <= xb:
            cells[i].remove_one(y)
            i += i & -i

    def _prefix_count(self, x: int, y_lo: int, y_hi: int) -> int:
        cells = self._cells
        total = 0
        while x:
            total += cells[x].count_range(y_lo, y_hi)
            x -= x & -x
        return total

    def box_nonempty(self, x_lo: int, x_hi: int, y_lo: int, y_hi: int) -> bool:
        """True iff some live point lies in [x_lo..x_hi] x [y_lo..y_hi]."""
        _check_box(x_lo, x_hi, y_lo, y_hi)
        x_hi = min(x_hi, self.x_bound)
        x_lo = max(x_lo, 1)
        if x_lo > x_hi:
            return False
        hi = self._prefix_count(x_hi, y_lo, y_hi)
        if x_lo == 1:
            return hi > 0
        return hi - self._prefix_count(x_lo - 1, y_lo, y_hi) > 0


def linear_scan_nonempty(
    points: Iterable[Point], x_lo: int, x_hi: int, y_lo: int, y_hi: int
) -> bool:
    """Reference answer by scanning every point."""
    _check_box(x_lo, x_hi, y_lo, y_hi)
    return any(x_lo <= x <= x_hi and y_lo <= y <= y_hi for x, y in points)
