"""Static simple graphs on vertices 1..n, edge-list parsing, and the
brute-force connectivity oracle used to validate every other structure.

The oracle is deliberately plain breadth-first search; everything else in
this package is ultimately checked against it.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class ParseError(ValueError):
    """Malformed edge-list or layout input. Carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Immutable simple undirected graph, vertices 1..n, no self-loops."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        es: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            e = norm_edge(u, v)
            if e in es:
                raise ValueError(f"duplicate edge ({e[0]},{e[1]})")
            es.add(e)
        self.n = n
        self.edges = frozenset(es)
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        # index 0 unused; neighbor lists sorted for deterministic traversal
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def check_vertex(self, u: int) -> None:
        if not (1 <= u <= self.n):
            raise ValueError(f"vertex {u} out of range 1..{self.n}")

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse the edge-list format.

    One edge per line as two whitespace-separated vertex ids.  An optional
    first data line ``p <n> <m>`` fixes the vertex count (otherwise n is the
    maximum id seen).  ``#`` starts a comment; blank lines are skipped; both
    LF and CRLF line endings are accepted.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    declared_n: int | None = None
    declared_m: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    saw_data = False
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if saw_data or declared_n is not None:
                raise ParseError("header must be the first data line", lineno)
            if len(parts) != 3:
                raise ParseError("header must be 'p <n> <m>'", lineno)
            try:
                declared_n = int(parts[1])
                declared_m = int(parts[2])
            except ValueError:
                raise ParseError("header must be 'p <n> <m>'", lineno) from None
            if declared_n < 0 or declared_m < 0:
                raise ParseError("header counts must be non-negative", lineno)
            continue
        saw_data = True
        if len(parts) != 2:
            raise ParseError(f"expected two vertex ids, got {len(parts)} tokens", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("vertex ids must be integers", lineno) from None
        if u < 1 or v < 1:
            raise ParseError("vertex ids must be >= 1", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if declared_n is not None and (u > declared_n or v > declared_n):
            raise ParseError(f"vertex id exceeds declared n={declared_n}", lineno)
        e = norm_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge ({e[0]},{e[1]})", lineno)
        seen.add(e)
        edges.append(e)
    if declared_m is not None and declared_m != len(edges):
        raise ParseError(
            f"header declares m={declared_m} but {len(edges)} edges given", last_line
        )
    n = declared_n if declared_n is not None else max((v for e in edges for v in e), default=0)
    return Graph(n, edges)


def oracle_connected(
    g: Graph,
    removed_edges: Iterable[Edge] = (),
    removed_vertices: Iterable[int] = (),
    u: int = 1,
    v: int = 1,
) -> bool:
    """BFS ground truth: are u and v connected in g minus the removals?

    Removing a vertex removes its incident edges.  Removed edges that are
    not in g are ignored.  Raises if u or v is out of range or removed.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    dead_v = set(removed_vertices)
    for w in dead_v:
        g.check_vertex(w)
    if u in dead_v or v in dead_v:
        raise ValueError("query endpoint was removed")
    if u == v:
        return True
    dead_e = {norm_edge(a, b) for a, b in removed_edges}
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y in seen or y in dead_v or norm_edge(x, y) in dead_e:
                continue
            if y == v:
                return True
            seen.add(y)
            queue.append(y)
    return False


def oracle_components(
    g: Graph,
    removed_edges: Iterable[Edge] = (),
    removed_vertices: Iterable[int] = (),
) -> dict[int, int]:
    """Component label per live vertex, by the same BFS rules as the oracle."""
    dead_v = set(removed_vertices)
    dead_e = {norm_edge(a, b) for a, b in removed_edges}
    label: dict[int, int] = {}
    nxt = 0
    for s in range(1, g.n + 1):
        if s in dead_v or s in label:
            continue
        label[s] = nxt
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y in dead_v or y in label or norm_edge(x, y) in dead_e:
                    continue
                label[y] = nxt
                queue.append(y)
        nxt += 1
    return label


def spanning_forest(g: Graph) -> set[Edge]:
    """Deterministic DFS spanning forest: roots ascending, neighbors ascending."""
    seen = [False] * (g.n + 1)
    forest: set[Edge] = set()
    for root in range(1, g.n + 1):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            x = stack.pop()
            # reversed so the lowest-id unseen neighbor is visited first
            for y in reversed(g.adj[x]):
                if not seen[y]:
                    seen[y] = True
                    forest.add(norm_edge(x, y))
                    stack.append(y)
    return forest


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(spanning_forest(g)) == g.n - 1
