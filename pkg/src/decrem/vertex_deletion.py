"""Decremental connectivity under vertex deletions, driven by a layout.

The engine fixes a linear layout of the graph and stores every edge as a
pair of points (pos(u), pos(v)) and (pos(v), pos(u)) in a static 2D
structure.  H starts as the partition of 1..n into maximal hole-free runs,
with an H-edge wherever some graph edge joins two runs.  Deleting a vertex
removes its position from its interval (at most one extra interval), so
after k deletions H has at most k + holes + 1 intervals, and every H-vertex
has degree at most twice the layout's cutwidth.

Boxes queried after a deletion never include a deleted position, so edges
with a deleted endpoint can never witness adjacency; the point structure
itself is never edited.

With ``lazy_holes=True`` the hole cuts are deferred until the first
deletion and every earlier query is answered from the single spine
interval.  That shortcut is only sound when the graph is connected, so the
flag requires a connected input.
"""

from __future__ import annotations

from .auxgraph import AuxGraph
from .graph import Graph, is_connected
from .layout import LinearLayout, greedy_path_cover, layout_from_path_cover
from .rangeindex import StaticPointSet

__all__ = ["LayoutDecremental"]


class LayoutDecremental:
    def __init__(self, g: Graph, layout: LinearLayout | None = None, lazy_holes: bool = False):
        if layout is None:
            layout = layout_from_path_cover(g, greedy_path_cover(g))
        if layout.g.n != g.n or layout.g.edges != g.edges:
            raise ValueError("layout was built for a different graph")
        self.g = g
        self.layout = layout
        self.points = StaticPointSet(layout.edge_points())
        self._deleted: set[int] = set()
        self._holes_pending = bool(lazy_holes)
        if lazy_holes:
            if not is_connected(g):
                raise ValueError("lazy hole splitting requires a connected graph")
            intervals = [(1, g.n)]
        else:
            intervals = self._spine_intervals()
        self.h = AuxGraph(
            intervals,
            edge_test=self.points.box_nonempty,
            seed_edges=not lazy_holes,
        )

    def _spine_intervals(self) -> list[tuple[int, int]]:
        n = self.g.n
        if n == 0:
            return []
        cuts = list(self.layout.holes)
        out = []
        lo = 1
        for h in cuts:
            out.append((lo, h))
            lo = h + 1
        out.append((lo, n))
        return out

    # -- queries -----------------------------------------------------------

    @property
    def deletions(self) -> int:
        return len(self._deleted)

    def is_deleted(self, u: int) -> bool:
        self.g.check_vertex(u)
        return u in self._deleted

    def h_size(self) -> int:
        return self.h.live_count

    def max_h_degree(self) -> int:
        return self.h.max_degree()

    def _locate(self, u: int):
        self.g.check_vertex(u)
        if u in self._deleted:
            raise ValueError(f"vertex {u} was deleted")
        return self.h.locate(self.layout.pos[u])

    def connected(self, u: int, v: int) -> bool:
        a = self._locate(u)
        b = self._locate(v)
        if a.id == b.id:
            return True
        return self.h.connected(a.id, b.id)

    def connected_all(self) -> bool:
        """Whether all still-live vertices are pairwise connected."""
        return self.h.connected_all()

    def vertex_labels(self) -> dict[int, int]:
        """Component label per live vertex, for bulk comparison."""
        comp = self.h.component_labels()
        return {
            v: comp[self.h.locate(self.layout.pos[v]).id]
            for v in range(1, self.g.n + 1)
            if v not in self._deleted
        }

    # -- mutation ------------------------------------------------------------

    def _materialize_holes(self) -> None:
        for h in self.layout.holes:
            self.h.split(h, gap=0)
        self._holes_pending = False

    def delete_vertex(self, u: int) -> None:
        self.g.check_vertex(u)
        if u in self._deleted:
            raise ValueError(f"vertex {u} was already deleted")
        if self._holes_pending:
            self._materialize_holes()
        self.h.split(self.layout.pos[u], gap=1)
        self._deleted.add(u)
        limit = len(self._deleted) + len(self.layout.holes) + 1
        if self.h.live_count > limit:
            raise AssertionError(f"|H| = {self.h.live_count} exceeds k + holes + 1 = {limit}")
