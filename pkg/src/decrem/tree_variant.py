"""Spanning trees of near-minimum maximum degree, and the decremental
engine that runs on a tree tour instead of a doubled one.

The tree tour has length 2n-1, so interval endpoints and point coordinates
stay below 2n regardless of m.  Tree edges still split intervals at their
two cut gaps; a nontree edge instead contributes up to eight points to a
deletable point set, and deleting it only removes those points (plus a
re-check of the H-edges they supported).

``min_degree_spanning_tree`` is the Furer-Raghavachari local search: while
the tree has a vertex of maximum degree k >= 3, look for a swap (or a short
chain of swaps) that reduces the count of degree-k vertices, never creating
a vertex of degree k+1.  At a local optimum the maximum degree is within
one of the best possible over all spanning trees.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .auxgraph import AuxGraph
from .graph import Edge, Graph, is_connected, norm_edge
from .rangeindex import DynamicPointSet
from .tour import Tour, build_tree_tour, nontree_edge_points, occurrence_pair_points

__all__ = ["bfs_spanning_tree", "min_degree_spanning_tree", "TreeDecremental"]


def bfs_spanning_tree(g: Graph, root: int = 1) -> Graph:
    """Breadth-first spanning tree, ascending neighbor order."""
    g.check_vertex(root)
    if not is_connected(g):
        raise ValueError("graph is not connected")
    seen = [False] * (g.n + 1)
    seen[root] = True
    queue = deque([root])
    edges: list[Edge] = []
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if not seen[y]:
                seen[y] = True
                edges.append(norm_edge(x, y))
                queue.append(y)
    return Graph(g.n, edges)


def _tree_path(adj: list[set[int]], u: int, v: int) -> list[int]:
    """Vertex sequence of the unique u-v path in a tree given as adjacency sets."""
    if u == v:
        return [u]
    prev = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                if y == v:
                    queue.clear()
                    break
                queue.append(y)
    path = [v]
    while path[-1] != u:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _swap(adj: list[set[int]], add: Edge, remove: Edge) -> None:
    a, b = add
    x, y = remove
    adj[x].discard(y)
    adj[y].discard(x)
    adj[a].add(b)
    adj[b].add(a)


def _removal_at(path: list[int], i: int) -> Edge:
    """The lower-sorting of the two path edges incident to path[i]."""
    w = path[i]
    before = norm_edge(path[i - 1], w)
    after = norm_edge(w, path[i + 1])
    return min(before, after)


def _improve_once(g: Graph, adj: list[set[int]], k: int) -> bool:
    """One improvement pass at maximum degree k.  Mutates adj; True if changed."""
    deg = [len(a) for a in adj]
    nontree = sorted(e for e in g.edges if e[1] not in adj[e[0]])

    # Direct swaps first: an edge with both endpoints at degree <= k-2 whose
    # tree path runs through some degree-k vertex.
    for u, v in nontree:
        if deg[u] > k - 2 or deg[v] > k - 2:
            continue
        path = _tree_path(adj, u, v)
        tops = [i for i in range(1, len(path) - 1) if deg[path[i]] == k]
        if tops:
            i = min(tops, key=lambda j: path[j])
            _swap(adj, (u, v), _removal_at(path, i))
            return True

    # Merge phase: grow blobs of vertices whose degree is, or can be made,
    # <= k-2.  Crossing a degree-(k-1) vertex records the enabler edge that
    # would reduce it; crossing a degree-k vertex yields a chain improvement.
    comp: dict[int, int] = {}
    labels = 0
    for s in range(1, g.n + 1):
        if deg[s] > k - 2 or s in comp:
            continue
        comp[s] = labels
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if deg[y] <= k - 2 and y not in comp:
                    comp[y] = labels
                    queue.append(y)
        labels += 1
    parent = list(range(labels))

    def find(c: int) -> int:
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    enabler: dict[int, tuple[int, Edge]] = {}

    changed = True
    while changed:
        changed = False
        for u, v in nontree:
            if u not in comp or v not in comp:
                continue
            if find(comp[u]) == find(comp[v]):
                continue
            path = _tree_path(adj, u, v)
            tops = [i for i in range(1, len(path) - 1) if deg[path[i]] == k]
            if tops:
                i = min(tops, key=lambda j: path[j])
                if _apply_chain(adj, deg, k, (u, v), path[i], enabler):
                    return True
                continue
            for w in path:
                if w not in comp:
                    # degree k-1 blocker: absorb it, remember how to reduce it
                    comp[w] = len(parent)
                    parent.append(len(parent))
                    enabler[w] = (len(enabler), norm_edge(u, v))
            root = find(comp[path[0]])
            for w in path[1:]:
                r = find(comp[w])
                if r != root:
                    parent[r] = root
            changed = True
    return False


def _apply_chain(
    adj: list[set[int]],
    deg: list[int],
    k: int,
    improve: Edge,
    top: int,
    enabler: dict[int, tuple[int, Edge]],
) -> bool:
    """Reduce blockers along recorded enabler edges, then swap out ``top``.

    Every step is validated against the current tree; a step whose
    precondition no longer holds aborts the chain (the tree stays valid and
    its maximum degree never exceeds k, so the caller just rescans).
    Returns True iff at least one swap was applied.
    """
    needed: list[int] = []
    seen: set[int] = set()
    stack = [improve[0], improve[1]]
    while stack:
        x = stack.pop()
        if x in seen or x not in enabler:
            continue
        seen.add(x)
        needed.append(x)
        stack.extend(enabler[x][1])
    # reduce in recording order so each enabler's own blockers go first
    needed.sort(key=lambda w: enabler[w][0])
    did = False
    for b in needed:
        if deg[b] <= k - 2:
            continue
        a1, a2 = enabler[b][1]
        if deg[a1] > k - 2 or deg[a2] > k - 2:
            return did
        path = _tree_path(adj, a1, a2)
        if b not in path[1:-1]:
            return did
        i = path.index(b)
        rem = _removal_at(path, i)
        _swap(adj, (a1, a2), rem)
        for t in (a1, a2):
            deg[t] += 1
        for t in rem:
            deg[t] -= 1
        did = True
    u, v = improve
    if deg[u] > k - 2 or deg[v] > k - 2:
        return did
    path = _tree_path(adj, u, v)
    tops = [i for i in range(1, len(path) - 1) if deg[path[i]] == k]
    if not tops:
        return did
    i = min(tops, key=lambda j: path[j])
    rem = _removal_at(path, i)
    _swap(adj, (u, v), rem)
    return True


def min_degree_spanning_tree(g: Graph, max_rounds: int | None = None) -> Graph:
    """Spanning tree whose maximum degree is at most one above optimal.

    Local search from the breadth-first tree.  ``max_rounds`` caps the
    number of improvement passes (default scales with n*m); hitting the cap
    raises RuntimeError rather than returning silently.
    """
    if not is_connected(g):
        raise ValueError("graph is not connected")
    if g.n <= 2:
        return bfs_spanning_tree(g)
    adj: list[set[int]] = [set() for _ in range(g.n + 1)]
    for u, v in bfs_spanning_tree(g).edges:
        adj[u].add(v)
        adj[v].add(u)
    cap = max_rounds if max_rounds is not None else 50 + 4 * g.n * g.m
    for _ in range(cap):
        k = max(len(a) for a in adj)
        if k <= 2 or not _improve_once(g, adj, k):
            break
    else:
        raise RuntimeError("improvement loop did not converge")
    edges = [norm_edge(u, v) for u in range(1, g.n + 1) for v in adj[u] if u < v]
    return Graph(g.n, edges)


class TreeDecremental:
    """Decremental connectivity over a spanning-tree tour.

    Deleting a tree edge splits H at the edge's two cut gaps.  Deleting a
    nontree edge removes its points; each H-edge those points supported is
    re-tested and dropped when its box became empty.
    """

    def __init__(
        self,
        g: Graph,
        tree: Graph | Iterable[Edge] | None = None,
        fast_tree: bool = False,
    ):
        if not is_connected(g):
            raise ValueError("graph is not connected")
        if tree is None:
            tree_g = bfs_spanning_tree(g) if fast_tree else min_degree_spanning_tree(g)
        else:
            tree_g = tree if isinstance(tree, Graph) else Graph(g.n, tree)
            if not tree_g.edges <= g.edges:
                raise ValueError("tree contains edges not in the graph")
        self.g = g
        self.tree = tree_g
        self.tour: Tour = build_tree_tour(tree_g, root=1)
        pts = occurrence_pair_points(self.tour) + nontree_edge_points(self.tour, g)
        self.points = DynamicPointSet(pts, x_bound=self.tour.length)
        self.h = AuxGraph([(1, self.tour.length)], edge_test=self.points.box_nonempty)
        self.deleted: set[Edge] = set()

    @property
    def deletions(self) -> int:
        return len(self.deleted)

    def max_tree_degree(self) -> int:
        return max(self.tree.degree(v) for v in range(1, self.tree.n + 1))

    def delete_edge(self, u: int, v: int) -> None:
        e = norm_edge(u, v)
        if e not in self.g.edges:
            raise ValueError(f"({u},{v}) is not an edge of the graph")
        if e in self.deleted:
            raise ValueError(f"edge ({u},{v}) already deleted")
        self.deleted.add(e)
        if e in self.tour.edge_pos:
            for gap_pos in self.tour.edge_pos[e]:
                self.h.split(gap_pos, gap=0)
            return
        # Nontree: drop the edge's points, then re-test every H-edge that one
        # of them might have been supporting.
        occ_u, occ_v = self.tour.occ[u], self.tour.occ[v]
        pairs: set[tuple[int, int]] = set()
        for p in occ_u:
            for q in occ_v:
                self.points.delete(p, q)
                self.points.delete(q, p)
                a = self.h.locate(p).id
                b = self.h.locate(q).id
                if a != b:
                    pairs.add((a, b) if a < b else (b, a))
        for a, b in pairs:
            if not self.h.has_edge(a, b):
                continue
            ia, ib = self.h.interval(a), self.h.interval(b)
            if not self.points.box_nonempty(ia.lo, ia.hi, ib.lo, ib.hi):
                self.h.remove_edge(a, b)

    def _locate(self, u: int) -> int:
        self.g.check_vertex(u)
        return self.h.locate(self.tour.first_occurrence(u)).id

    def connected(self, u: int, v: int) -> bool:
        return self.h.connected(self._locate(u), self._locate(v))

    def connected_all(self) -> bool:
        return self.h.connected_all()

    def vertex_labels(self) -> dict[int, int]:
        """Component label per vertex, from one sweep over H."""
        comp = self.h.component_labels()
        loc = self.h.locate
        first = self.tour.occ
        return {u: comp[loc(first[u][0]).id] for u in range(1, self.g.n + 1)}
