"""Euler tours over graphs and trees, plus the point sets derived from them.

Two tour kinds share one representation:

* ``doubled`` — an Euler circuit of the graph with every edge doubled
  (traversed once in each direction), length 2m.  Built with Hierholzer's
  algorithm starting at vertex 1, always taking the lowest-id unused arc.
* ``tree`` — the sequence of the recursion "visit v; for each child u:
  recurse into u, then visit u", length 2n-1.

Positions are 1-based and never renumbered.  The *cut gaps* of an edge are
the positions i such that cutting between positions i and i+1 (cyclically)
separates the tour along that edge.
"""

from __future__ import annotations

from .graph import Edge, Graph, is_connected, norm_edge

Point = tuple[int, int]


class Tour:
    """An Euler tour: vertex sequence, occurrence lists, per-edge cut gaps."""

    __slots__ = ("kind", "seq", "occ", "edge_pos", "root")

    def __init__(
        self,
        kind: str,
        seq: list[int],
        edge_pos: dict[Edge, tuple[int, int]],
        root: int | None = None,
        occ: dict[int, tuple[int, ...]] | None = None,
    ):
        self.kind = kind
        self.seq = tuple(seq)
        self.root = root
        if occ is None:
            acc: dict[int, list[int]] = {}
            for pos, v in enumerate(seq, start=1):
                acc.setdefault(v, []).append(pos)
            occ = {v: tuple(ps) for v, ps in acc.items()}
        self.occ = occ
        self.edge_pos = edge_pos

    @property
    def length(self) -> int:
        return len(self.seq)

    def vertex_at(self, pos: int) -> int:
        if not (1 <= pos <= len(self.seq)):
            raise ValueError(f"position {pos} out of range 1..{len(self.seq)}")
        return self.seq[pos - 1]

    def first_occurrence(self, v: int) -> int:
        return self.occ[v][0]


def build_doubled_tour(g: Graph) -> Tour:
    """Euler circuit of the doubled graph.  Requires g connected with m >= 1."""
    if g.m == 0:
        raise ValueError("graph has no edges")
    if not is_connected(g):
        raise ValueError("graph is not connected")
    # Directed model: each edge {u,v} yields arcs u->v and v->u, used once each.
    ptr = [0] * (g.n + 1)
    adj = g.adj
    stack = [1]
    circuit: list[int] = []
    while stack:
        v = stack[-1]
        if ptr[v] < len(adj[v]):
            w = adj[v][ptr[v]]
            ptr[v] += 1
            stack.append(w)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    if len(circuit) != 2 * g.m + 1:
        raise AssertionError("Euler circuit construction failed")
    seq = circuit[:-1]
    length = len(seq)
    pos_lists: dict[Edge, list[int]] = {}
    for i in range(1, length + 1):
        u = seq[i - 1]
        v = seq[i % length]
        pos_lists.setdefault(norm_edge(u, v), []).append(i)
    edge_pos = {}
    for e, ps in pos_lists.items():
        if len(ps) != 2:
            raise AssertionError(f"edge {e} realized {len(ps)} times")
        edge_pos[e] = (ps[0], ps[1])
    return Tour("doubled", seq, edge_pos)


def build_tree_tour(tree: Graph, root: int = 1) -> Tour:
    """Tour of a tree by the child-revisit recursion, length 2n-1.

    ``seq`` is the literal transcript of "visit v; for each child u:
    recurse, visit u".  The transcript prints the child at each return
    step, but the doubled-edge walk underneath is standing at the parent
    there, so occurrences are recorded in walk coordinates: position
    first(v) belongs to v and every trailing position last(u) of a child
    belongs to its parent.  Each vertex then occurs d_T(v) times (root:
    one more, for the final return), and the two cut gaps of a tree edge
    are the two arcs that realize it: (first(u)-1, last(u)-1).
    """
    tree.check_vertex(root)
    if tree.m != tree.n - 1 or not is_connected(tree):
        raise ValueError("input graph is not a tree")
    adj = tree.adj
    seq: list[int] = []
    parent = [0] * (tree.n + 1)
    # tags: 1 = expand subtree, 0 = emit the trailing visit
    stack: list[tuple[int, int, int]] = [(1, root, 0)]
    while stack:
        tag, v, p = stack.pop()
        if tag == 0:
            seq.append(v)
            continue
        seq.append(v)
        parent[v] = p
        for w in reversed(adj[v]):
            if w != p:
                stack.append((0, w, 0))
                stack.append((1, w, v))
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, v in enumerate(seq, start=1):
        if v not in first:
            first[v] = pos
        last[v] = pos
    acc: dict[int, list[int]] = {v: [] for v in range(1, tree.n + 1)}
    for pos, v in enumerate(seq, start=1):
        if pos == first[v]:
            acc[v].append(pos)
        else:
            acc[parent[v]].append(pos)
    occ = {v: tuple(sorted(ps)) for v, ps in acc.items()}
    edge_pos: dict[Edge, tuple[int, int]] = {}
    for v in range(1, tree.n + 1):
        if v == root:
            continue
        edge_pos[norm_edge(parent[v], v)] = (first[v] - 1, last[v] - 1)
    return Tour("tree", seq, edge_pos, root=root, occ=occ)


def occurrence_pair_points(t: Tour) -> list[Point]:
    """All ordered pairs of distinct positions of the same vertex."""
    pts: list[Point] = []
    for ps in t.occ.values():
        for p in ps:
            for q in ps:
                if p != q:
                    pts.append((p, q))
    return pts


def nontree_edge_points(t: Tour, g: Graph) -> list[Point]:
    """Both-ordering position pairs for every edge of g absent from the tour's tree."""
    if t.kind != "tree":
        raise ValueError("nontree points are defined for tree tours")
    pts: list[Point] = []
    occ = t.occ
    for u, v in g.edges:
        if norm_edge(u, v) in t.edge_pos:
            continue
        for p in occ[u]:
            for q in occ[v]:
                pts.append((p, q))
                pts.append((q, p))
    return pts
