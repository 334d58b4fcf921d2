"""Cut queries on a fixed tree via an LCA index.

A vertex w separates u from v in a tree exactly when w lies strictly
inside the unique u-v path; an edge separates them exactly when it is
one of the path's edges.  Both tests reduce to ancestor checks once
lowest common ancestors are available, so a single O(n log n) index
answers every witness query in constant time per candidate.
"""

from __future__ import annotations

from .graph import Edge, Graph, norm_edge

__all__ = [
    "LcaIndex",
    "is_vertex_cut_tree",
    "is_edge_cut_tree",
    "k_vertex_witness_tree",
    "k_edge_witness_tree",
]


class LcaIndex:
    """Euler tour + sparse-table RMQ over a rooted tree."""

    __slots__ = ("tree", "root", "parent", "depth", "tin", "tout", "_first",
                 "_euler", "_table", "_logs")

    def __init__(self, tree: Graph, root: int = 1):
        n = tree.n
        if n < 1:
            raise ValueError("tree must have at least one vertex")
        tree.check_vertex(root)
        if tree.m != n - 1:
            raise ValueError(f"not a tree: {tree.m} edges on {n} vertices")

        parent = [0] * (n + 1)
        depth = [0] * (n + 1)
        tin = [0] * (n + 1)
        tout = [0] * (n + 1)
        euler: list[int] = []
        first = [0] * (n + 1)

        # Iterative DFS; a negative stack entry means "append v on the way
        # back up", which produces the classic 2n-1 Euler sequence.
        clock = 0
        seen = [False] * (n + 1)
        stack = [root]
        seen[root] = True
        while stack:
            v = stack.pop()
            if v < 0:
                euler.append(-v)
                continue
            tin[v] = clock
            clock += 1
            first[v] = len(euler)
            euler.append(v)
            for u in reversed(tree.adj[v]):
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    stack.append(-v)
                    stack.append(u)
        if clock != n:
            raise ValueError("tree is not connected")
        # tout by a second pass over tin order: descendants of v occupy the
        # half-open tin range [tin[v], tout[v]).
        order = sorted(range(1, n + 1), key=lambda v: tin[v])
        for v in reversed(order):
            tout[v] = max(tout[v], tin[v] + 1)
            p = parent[v]
            if p:
                tout[p] = max(tout[p], tout[v])

        # Sparse table of argmin-by-depth over the Euler sequence.
        size = len(euler)
        logs = [0] * (size + 1)
        for i in range(2, size + 1):
            logs[i] = logs[i >> 1] + 1
        table = [list(range(size))]
        j = 1
        while (1 << j) <= size:
            prev = table[j - 1]
            half = 1 << (j - 1)
            row = []
            for i in range(size - (1 << j) + 1):
                a, b = prev[i], prev[i + half]
                row.append(a if depth[euler[a]] <= depth[euler[b]] else b)
            table.append(row)
            j += 1

        self.tree = tree
        self.root = root
        self.parent = parent
        self.depth = depth
        self.tin = tin
        self.tout = tout
        self._first = first
        self._euler = euler
        self._table = table
        self._logs = logs

    def lca(self, u: int, v: int) -> int:
        self.tree.check_vertex(u)
        self.tree.check_vertex(v)
        l, r = self._first[u], self._first[v]
        if l > r:
            l, r = r, l
        j = self._logs[r - l + 1]
        a = self._table[j][l]
        b = self._table[j][r - (1 << j) + 1]
        depth = self.depth
        euler = self._euler
        return euler[a] if depth[euler[a]] <= depth[euler[b]] else euler[b]

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when a is b or a proper ancestor of b."""
        return self.tin[a] <= self.tin[b] < self.tout[a]

    def path_length(self, u: int, v: int) -> int:
        w = self.lca(u, v)
        return self.depth[u] + self.depth[v] - 2 * self.depth[w]


def is_vertex_cut_tree(idx: LcaIndex, u: int, v: int, w: int) -> bool:
    """Does removing vertex w disconnect u from v in the tree?"""
    idx.tree.check_vertex(u)
    idx.tree.check_vertex(v)
    idx.tree.check_vertex(w)
    if u == v:
        raise ValueError("u and v must be distinct vertices")
    if w == u or w == v:
        raise ValueError("w must differ from both query endpoints")
    # Strictly interior to the u-v path: below (or equal to) lca(u, v) and an
    # ancestor-or-equal of at least one endpoint.  Endpoint equality was
    # already excluded above.
    anc = idx.lca(u, v)
    if not idx.is_ancestor(anc, w):
        return False
    return idx.is_ancestor(w, u) or idx.is_ancestor(w, v)


def is_edge_cut_tree(idx: LcaIndex, u: int, v: int, e: Edge) -> bool:
    """Does removing tree edge e disconnect u from v?"""
    idx.tree.check_vertex(u)
    idx.tree.check_vertex(v)
    x, y = norm_edge(*e)
    if not idx.tree.has_edge(x, y):
        raise ValueError(f"{(x, y)} is not an edge of the tree")
    child = x if idx.parent[x] == y else y
    # e lies on the u-v path iff exactly one endpoint sits in the subtree
    # hanging below e.
    return idx.is_ancestor(child, u) != idx.is_ancestor(child, v)


def k_vertex_witness_tree(idx: LcaIndex, u: int, v: int, cuts) -> bool:
    """True when some vertex of ``cuts`` separates u from v in the tree."""
    idx.tree.check_vertex(u)
    idx.tree.check_vertex(v)
    if u == v:
        return False
    for w in cuts:
        if is_vertex_cut_tree(idx, u, v, w):
            return True
    return False


def k_edge_witness_tree(idx: LcaIndex, u: int, v: int, cuts) -> bool:
    """True when some edge of ``cuts`` separates u from v in the tree."""
    idx.tree.check_vertex(u)
    idx.tree.check_vertex(v)
    if u == v:
        return False
    for e in cuts:
        if is_edge_cut_tree(idx, u, v, e):
            return True
    return False
