"""Worst-case decremental edge connectivity over a doubled Euler tour.

The tour of the doubled graph fixes positions 1..2m.  H starts as the single
interval [1..2m]; deleting edge e splits at its two cut gaps (the wrap-around
gap 2m is a permanent cut, so the interval count after k deletions is at most
2k+1).  Two intervals are H-adjacent iff some vertex occurs in both, decided
by box emptiness over the ordered occurrence-pair points.  Then u and v are
connected iff the intervals of their first occurrences are connected in H.

``k_edge_witness`` answers "is S a u,v-cut" by running the deletions on a
sparse certificate, so its cost depends on |S| and n but not on m.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .auxgraph import AuxGraph
from .certificate import sparse_certificate
from .graph import Edge, Graph, norm_edge, oracle_components
from .rangeindex import StaticPointSet
from .tour import Tour, build_doubled_tour, occurrence_pair_points


class EdgeDecremental:
    """Decremental connectivity under edge deletions."""

    def __init__(self, g: Graph):
        self.g = g
        if g.n == 1:
            # single vertex, no tour to build; the only query is (1, 1)
            self.tour = None
            self.points = StaticPointSet([])
            self.h = AuxGraph([])
            self.deleted = set()
            return
        self.tour: Tour = build_doubled_tour(g)
        self.points = StaticPointSet(occurrence_pair_points(self.tour))
        self.h = AuxGraph([(1, self.tour.length)], edge_test=self.points.box_nonempty)
        self.deleted: set[Edge] = set()

    @property
    def deletions(self) -> int:
        return len(self.deleted)

    def delete_edge(self, u: int, v: int) -> None:
        """Cut the tour at both gaps of edge {u,v}."""
        e = norm_edge(u, v)
        if e not in self.g.edges:
            raise ValueError(f"({u},{v}) is not an edge of the graph")
        if e in self.deleted:
            raise ValueError(f"edge ({u},{v}) already deleted")
        self.deleted.add(e)
        # the second cut operates on the partition the first one left behind
        for gap_pos in self.tour.edge_pos[e]:
            self.h.split(gap_pos, gap=0)

    def _locate(self, u: int) -> int:
        self.g.check_vertex(u)
        return self.h.locate(self.tour.first_occurrence(u)).id

    def connected(self, u: int, v: int) -> bool:
        if self.tour is None:
            self.g.check_vertex(u)
            self.g.check_vertex(v)
            return True
        return self.h.connected(self._locate(u), self._locate(v))

    def connected_all(self) -> bool:
        return self.h.connected_all()

    def vertex_labels(self) -> dict[int, int]:
        """Component label per vertex, from one sweep over H (for bulk checks)."""
        if self.tour is None:
            return {1: 0}
        comp = self.h.component_labels()
        loc = self.h.locate
        first = self.tour.occ
        return {u: comp[loc(first[u][0]).id] for u in range(1, self.g.n + 1)}


class WitnessSession:
    """One certificate-backed deletion of S, reusable for many pair queries.

    Building once and querying all pairs is the reachability-matrix usage;
    ``k_edge_witness`` is the one-shot form.
    """

    def __init__(self, g: Graph, edges: Iterable[Edge]):
        s = []
        seen: set[Edge] = set()
        for a, b in edges:
            e = norm_edge(a, b)
            if e in seen:
                raise ValueError(f"duplicate edge ({a},{b}) in S")
            seen.add(e)
            if e not in g.edges:
                raise ValueError(f"({a},{b}) is not an edge of the graph")
            s.append(e)
        self.g = g
        self.s = s
        # parameter |S|+1: a j-certificate only preserves cuts smaller than j
        cert = sparse_certificate(g, len(s) + 1)
        sub = cert.subgraph
        self._comp = oracle_components(sub)
        # one decremental structure per certificate component that we touch,
        # on a relabeled copy (tours need connected input)
        self._engines: dict[int, tuple[EdgeDecremental, dict[int, int]]] = {}
        self._sub = sub

    def _engine_for(self, c: int) -> tuple[EdgeDecremental, dict[int, int]]:
        got = self._engines.get(c)
        if got is not None:
            return got
        members = sorted(v for v, lbl in self._comp.items() if lbl == c)
        relabel = {v: i for i, v in enumerate(members, start=1)}
        edges = [
            (relabel[a], relabel[b])
            for a, b in self._sub.edges
            if self._comp[a] == c and self._comp[b] == c
        ]
        engine = EdgeDecremental(Graph(len(members), edges))
        for a, b in self.s:
            if self._comp.get(a) == c and norm_edge(a, b) in self._sub.edges:
                engine.delete_edge(relabel[a], relabel[b])
        self._engines[c] = (engine, relabel)
        return engine, relabel

    def connected(self, u: int, v: int) -> bool:
        self.g.check_vertex(u)
        self.g.check_vertex(v)
        if u == v:
            return True
        if self._comp[u] != self._comp[v]:
            return False
        engine, relabel = self._engine_for(self._comp[u])
        return engine.connected(relabel[u], relabel[v])

    def is_cut(self, u: int, v: int) -> bool:
        if u == v:
            raise ValueError("witness endpoints must differ")
        return not self.connected(u, v)


def k_edge_witness(g: Graph, u: int, v: int, edges: Sequence[Edge]) -> bool:
    """True iff deleting the edge set S disconnects u from v.

    Certificate first, then the decremental deletions, then one query;
    edges of S outside the certificate are skipped (they cannot matter).
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise ValueError("witness endpoints must differ")
    return WitnessSession(g, edges).is_cut(u, v)
