"""Shared enumerators for the exhaustive sweeps."""

import heapq
import itertools

from decrem.graph import Graph, is_connected, norm_edge


def all_graphs(n: int, connected_only: bool = False):
    """Every labeled graph on vertices 1..n, as Graph objects."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for r in range(len(pairs) + 1):
        for es in itertools.combinations(pairs, r):
            g = Graph(n, es)
            if connected_only and not is_connected(g):
                continue
            yield g


def connected_graphs(n: int):
    return all_graphs(n, connected_only=True)


def tree_from_prufer(n: int, seq) -> Graph:
    """Decode a Prüfer sequence (length n-2) into a labeled tree."""
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(1, 2)])
    assert len(seq) == n - 2
    deg = [1] * (n + 1)
    for x in seq:
        deg[x] += 1
    heap = [v for v in range(1, n + 1) if deg[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append(norm_edge(leaf, x))
        deg[leaf] -= 1
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(heap, x)
    a = heapq.heappop(heap)
    b = heapq.heappop(heap)
    edges.append(norm_edge(a, b))
    return Graph(n, edges)


def all_trees(n: int):
    """All n^(n-2) labeled trees via Prüfer sequences."""
    if n <= 2:
        yield tree_from_prufer(n, ())
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        yield tree_from_prufer(n, seq)
