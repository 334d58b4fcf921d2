"""The interval auxiliary graph H.

Vertices of H are disjoint position intervals over a fixed 1-based axis
(tour or layout positions; the axis is never renumbered).  Deleting an edge
or vertex of the underlying graph splits intervals; whether two intervals
are adjacent in H is decided by a caller-supplied box-emptiness test over a
point set.  After a split, each new piece is re-tested against every former
neighbor of the old interval, and the two pieces against each other.

Connectivity over H is a swappable strategy.  Shipped backends:

* ``DfsBackend`` (default) — searches the adjacency sets on demand.
* ``UnionFindBackend`` — incremental-only (edges may be added, intervals
  never split); backs the label decoder.

A fully-dynamic backend (e.g. Eppstein-style) would slot into the same
contract but is not provided.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import deque
from typing import Callable, Hashable, Iterable

EdgeTest = Callable[[int, int, int, int], bool]


class IntervalVertex:
    """A live or retired interval [lo..hi] with a stable id."""

    __slots__ = ("id", "lo", "hi", "alive")

    def __init__(self, id: int, lo: int, hi: int):
        self.id = id
        self.lo = lo
        self.hi = hi
        self.alive = True

    def __repr__(self) -> str:  # pragma: no cover
        state = "" if self.alive else " dead"
        return f"<iv {self.id} [{self.lo}..{self.hi}]{state}>"


class WorstCaseUnionFind:
    """Union by size without path compression.

    ``find`` is read-only, so every operation has worst-case O(log n) time;
    tree height never exceeds log2 of the component size.
    """

    def __init__(self, elements: Iterable[Hashable] = ()):
        self._parent: dict = {}
        self._size: dict = {}
        for x in elements:
            self.add(x)

    def add(self, x: Hashable) -> None:
        if x in self._parent:
            raise ValueError(f"element {x!r} already present")
        self._parent[x] = x
        self._size[x] = 1

    def __contains__(self, x: Hashable) -> bool:
        return x in self._parent

    def find(self, x: Hashable):
        p = self._parent
        if x not in p:
            raise KeyError(x)
        while p[x] != x:
            x = p[x]
        return x

    def union(self, x: Hashable, y: Hashable):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        if self._size[rx] < self._size[ry]:
            rx, ry = ry, rx
        self._parent[ry] = rx
        self._size[rx] += self._size[ry]
        return rx

    def depth(self, x: Hashable) -> int:
        """Length of the parent walk from x to its root (for bound checks)."""
        p = self._parent
        d = 0
        while p[x] != x:
            x = p[x]
            d += 1
        return d


class DfsBackend:
    """Answers connectivity by searching H's adjacency on demand."""

    def attach(self, h: "AuxGraph") -> None:
        self._h = h

    def on_new_vertex(self, vid: int) -> None:
        pass

    def on_add_edge(self, a: int, b: int) -> None:
        pass

    def on_remove_edge(self, a: int, b: int) -> None:
        pass

    def on_retire(self, vid: int) -> None:
        pass

    def connected(self, a: int, b: int) -> bool:
        if a == b:
            return True
        adj = self._h._adj
        seen = {a}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y == b:
                    return True
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return False

    def connected_all(self) -> bool:
        h = self._h
        ids = h.live_ids()
        if len(ids) <= 1:
            return True
        adj = h._adj
        seen = {ids[0]}
        queue = deque([ids[0]])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == len(ids)


class UnionFindBackend:
    """Incremental-only backend: supports added edges, refuses splits."""

    def __init__(self) -> None:
        self.uf = WorstCaseUnionFind()

    def attach(self, h: "AuxGraph") -> None:
        self._h = h
        for vid in h.live_ids():
            self.uf.add(vid)

    def on_new_vertex(self, vid: int) -> None:
        raise RuntimeError("union-find backend is incremental-only; splits unsupported")

    on_retire = on_new_vertex

    def on_add_edge(self, a: int, b: int) -> None:
        self.uf.union(a, b)

    def on_remove_edge(self, a: int, b: int) -> None:
        raise RuntimeError("union-find backend cannot un-merge components")

    def connected(self, a: int, b: int) -> bool:
        return self.uf.find(a) == self.uf.find(b)

    def connected_all(self) -> bool:
        ids = self._h.live_ids()
        if not ids:
            return True
        r = self.uf.find(ids[0])
        return all(self.uf.find(i) == r for i in ids[1:])


class AuxGraph:
    """Interval partition of a position axis plus inter-interval edges."""

    def __init__(
        self,
        intervals: Iterable[tuple[int, int]],
        edge_test: EdgeTest | None = None,
        seed_edges: bool = False,
        backend=None,
    ):
        self._iv: list[IntervalVertex] = []
        self._adj: dict[int, set[int]] = {}
        self._starts: list[int] = []
        self._ids: list[int] = []
        self._edge_test = edge_test
        self._live = 0
        prev_hi = 0
        for lo, hi in intervals:
            if lo > hi or lo <= prev_hi:
                raise ValueError("intervals must be disjoint, ascending, non-empty")
            prev_hi = hi
            self._new_interval(lo, hi, notify=False)
        self.backend = backend if backend is not None else DfsBackend()
        self.backend.attach(self)
        if seed_edges:
            if edge_test is None:
                raise ValueError("seed_edges requires an edge test")
            live = self.live_ids()
            for i, a in enumerate(live):
                iva = self._iv[a]
                for b in live[i + 1 :]:
                    ivb = self._iv[b]
                    if edge_test(iva.lo, iva.hi, ivb.lo, ivb.hi):
                        self.add_edge(a, b)

    # -- bookkeeping ----------------------------------------------------

    def _new_interval(self, lo: int, hi: int, notify: bool = True) -> IntervalVertex:
        vid = len(self._iv)
        iv = IntervalVertex(vid, lo, hi)
        self._iv.append(iv)
        self._adj[vid] = set()
        idx = bisect_left(self._starts, lo)
        self._starts.insert(idx, lo)
        self._ids.insert(idx, vid)
        self._live += 1
        if notify:
            self.backend.on_new_vertex(vid)
        return iv

    def _retire(self, iv: IntervalVertex) -> set[int]:
        iv.alive = False
        idx = bisect_left(self._starts, iv.lo)
        del self._starts[idx]
        del self._ids[idx]
        nbrs = self._adj.pop(iv.id)
        for c in nbrs:
            self._adj[c].discard(iv.id)
        self._live -= 1
        self.backend.on_retire(iv.id)
        return nbrs

    # -- queries ---------------------------------------------------------

    @property
    def live_count(self) -> int:
        return self._live

    def live_ids(self) -> list[int]:
        return list(self._ids)

    def interval(self, vid: int) -> IntervalVertex:
        return self._iv[vid]

    def neighbors(self, vid: int) -> set[int]:
        return set(self._adj[vid])

    def degree(self, vid: int) -> int:
        return len(self._adj[vid])

    def max_degree(self) -> int:
        return max((len(self._adj[i]) for i in self._ids), default=0)

    def locate(self, pos: int) -> IntervalVertex:
        """The live interval containing pos.  Raises if pos is uncovered."""
        i = bisect_right(self._starts, pos) - 1
        if i >= 0:
            iv = self._iv[self._ids[i]]
            if pos <= iv.hi:
                return iv
        raise ValueError(f"position {pos} is not covered by any live interval")

    def connected(self, a: int, b: int) -> bool:
        for vid in (a, b):
            if vid >= len(self._iv) or not self._iv[vid].alive:
                raise ValueError(f"interval id {vid} is not live")
        return self.backend.connected(a, b)

    def connected_all(self) -> bool:
        return self.backend.connected_all()

    def component_labels(self) -> dict[int, int]:
        """Label live interval ids by connected component of H."""
        labels: dict[int, int] = {}
        nxt = 0
        adj = self._adj
        for s in self._ids:
            if s in labels:
                continue
            labels[s] = nxt
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in labels:
                        labels[y] = nxt
                        queue.append(y)
            nxt += 1
        return labels

    # -- mutation ----------------------------------------------------------

    def add_edge(self, a: int, b: int) -> None:
        if a == b:
            return
        if b not in self._adj[a]:
            self._adj[a].add(b)
            self._adj[b].add(a)
            self.backend.on_add_edge(a, b)

    def remove_edge(self, a: int, b: int) -> None:
        if b in self._adj[a]:
            self._adj[a].discard(b)
            self._adj[b].discard(a)
            self.backend.on_remove_edge(a, b)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj[a]

    def split(self, at: int, gap: int) -> tuple[IntervalVertex, ...]:
        """Split the interval containing ``at``.

        gap=0 cuts between positions at and at+1 (edge deletion); gap=1
        removes position at itself (vertex deletion).  New pieces are tested
        against every former neighbor and against each other.  A gap=0 cut
        at an interval's right border is a no-op.  Returns the live pieces.
        """
        if self._edge_test is None:
            raise RuntimeError("this auxiliary graph was built without an edge test")
        old = self.locate(at)
        a, b = old.lo, old.hi
        if gap == 0:
            if at == b:
                return (old,)
            ranges = [(a, at), (at + 1, b)]
        elif gap == 1:
            ranges = [(lo, hi) for lo, hi in ((a, at - 1), (at + 1, b)) if lo <= hi]
        else:
            raise ValueError("gap must be 0 or 1")
        old_nbrs = self._retire(old)
        pieces = [self._new_interval(lo, hi) for lo, hi in ranges]
        test = self._edge_test
        for piece in pieces:
            for c in old_nbrs:
                ivc = self._iv[c]
                if test(piece.lo, piece.hi, ivc.lo, ivc.hi):
                    self.add_edge(piece.id, c)
        if len(pieces) == 2:
            p, q = pieces
            if test(p.lo, p.hi, q.lo, q.hi):
                self.add_edge(p.id, q.id)
        return tuple(pieces)
