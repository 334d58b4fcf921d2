"""Sparse k-edge-connectivity certificates by repeated forest peeling.

Forest i is a deterministic spanning forest of the graph minus forests
1..i-1 (Nagamochi-Ibaraki style).  The union has at most k(n-1) edges and
preserves local edge connectivity up to k, so deleting fewer than k edges
leaves the same connectivity verdicts as in the full graph; callers that
delete a set S therefore build the certificate with parameter |S|+1.
"""

from __future__ import annotations

from .graph import Edge, Graph


class Certificate:
    """k edge-disjoint peeled forests and their union."""

    __slots__ = ("k", "forests", "subgraph")

    def __init__(self, k: int, forests: list[frozenset[Edge]], subgraph: Graph):
        self.k = k
        self.forests = forests
        self.subgraph = subgraph


def _peel_forest(n: int, adj: list[list[int]]) -> set[Edge]:
    """One deterministic DFS spanning forest over the given adjacency."""
    seen = [False] * (n + 1)
    forest: set[Edge] = set()
    for root in range(1, n + 1):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            x = stack.pop()
            for y in reversed(adj[x]):
                if not seen[y]:
                    seen[y] = True
                    forest.add((x, y) if x < y else (y, x))
                    stack.append(y)
    return forest


def sparse_certificate(g: Graph, k: int) -> Certificate:
    """Peel k spanning forests off g.  Later forests may be empty."""
    if k < 1:
        raise ValueError("k must be >= 1")
    adj = [sorted(a) for a in g.adj]
    forests: list[frozenset[Edge]] = []
    kept: set[Edge] = set()
    for _ in range(k):
        forest = _peel_forest(g.n, adj)
        forests.append(frozenset(forest))
        kept |= forest
        if forest:
            for u, v in forest:
                adj[u].remove(v)
                adj[v].remove(u)
    return Certificate(k, forests, Graph(g.n, kept))
