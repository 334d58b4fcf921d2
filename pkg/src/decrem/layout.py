"""Linear layouts of a graph: holes, cutwidth, crossing edges, path covers.

A layout is a bijection from vertices to positions 1..n.  Gap i sits
between positions i and i+1; an edge placed at positions (a, b) with a < b
crosses gap i iff a <= i < b, and crosses the point p iff a <= p <= b.
A gap whose two flanking vertices are not adjacent in the graph is a hole.
Concatenating the paths of a path cover gives a layout whose holes all lie
at the seams, so a cover of size t yields at most t-1 holes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph, ParseError

__all__ = [
    "LinearLayout",
    "layout_from_path_cover",
    "greedy_path_cover",
    "exact_path_cover",
    "parse_layout",
    "format_layout",
]


class LinearLayout:
    """A fixed vertex order with precomputed holes and gap crossing counts."""

    __slots__ = ("g", "order", "pos", "holes", "profile")

    def __init__(self, g: Graph, order: Sequence[int]):
        n = g.n
        if sorted(order) != list(range(1, n + 1)):
            raise ValueError("order must be a permutation of 1..n")
        self.g = g
        self.order = tuple(order)
        pos = [0] * (n + 1)
        for i, v in enumerate(self.order, start=1):
            pos[v] = i
        self.pos = tuple(pos)
        # profile[i-1] = number of edges crossing gap i
        profile = [0] * max(0, n - 1)
        for u, v in g.edges:
            a, b = sorted((pos[u], pos[v]))
            for i in range(a, b):
                profile[i - 1] += 1
        self.profile = tuple(profile)
        holes = []
        for i in range(1, n):
            if not g.has_edge(self.order[i - 1], self.order[i]):
                holes.append(i)
        self.holes = tuple(holes)

    @property
    def n(self) -> int:
        return self.g.n

    def cutwidth(self) -> int:
        return max(self.profile, default=0)

    def position(self, u: int) -> int:
        self.g.check_vertex(u)
        return self.pos[u]

    def vertex_at(self, i: int) -> int:
        if not (1 <= i <= self.g.n):
            raise ValueError(f"position {i} out of range 1..{self.g.n}")
        return self.order[i - 1]

    def edge_points(self) -> list[tuple[int, int]]:
        """Every edge as both (pos(u),pos(v)) orientations."""
        pts = []
        for u, v in self.g.edges:
            a, b = self.pos[u], self.pos[v]
            pts.append((a, b))
            pts.append((b, a))
        return pts

    def crossing_edges(self, u: int) -> tuple[tuple[int, int], ...]:
        """Edges crossing the point pos(u), as sorted (a, b) position pairs.

        This includes u's incident edges and any edge spanning over u.
        """
        p = self.position(u)
        out = []
        for x, y in self.g.edges:
            a, b = sorted((self.pos[x], self.pos[y]))
            if a <= p <= b:
                out.append((a, b))
        return tuple(sorted(out))

    def point_cutwidth(self, u: int) -> int:
        return len(self.crossing_edges(u))

    def edges_crossing_gap(self, h: int) -> tuple[tuple[int, int], ...]:
        if not (1 <= h <= self.g.n - 1):
            raise ValueError(f"gap {h} out of range 1..{self.g.n - 1}")
        out = []
        for x, y in self.g.edges:
            a, b = sorted((self.pos[x], self.pos[y]))
            if a <= h < b:
                out.append((a, b))
        return tuple(sorted(out))

    def holes_of_vertex(self, u: int) -> tuple[int, ...]:
        """Holes spanned by some crossing edge of u."""
        spanned = set()
        hs = self.holes
        for a, b in self.crossing_edges(u):
            for h in hs:
                if a <= h < b:
                    spanned.add(h)
        return tuple(sorted(spanned))

    def spine_paths(self) -> list[list[int]]:
        """Split the order at the holes: a path cover of size holes+1."""
        paths: list[list[int]] = []
        cur: list[int] = []
        holes = set(self.holes)
        for i, v in enumerate(self.order, start=1):
            cur.append(v)
            if i in holes:
                paths.append(cur)
                cur = []
        if cur:
            paths.append(cur)
        return paths

    def __repr__(self) -> str:  # pragma: no cover
        return f"LinearLayout(n={self.g.n}, holes={len(self.holes)}, cutwidth={self.cutwidth()})"


def layout_from_path_cover(g: Graph, paths: Iterable[Sequence[int]]) -> LinearLayout:
    """Concatenate the cover's paths into a layout with at most |paths|-1 holes."""
    order: list[int] = []
    seen: set[int] = set()
    npaths = 0
    for path in paths:
        if not path:
            raise ValueError("empty path in cover")
        npaths += 1
        for i, v in enumerate(path):
            g.check_vertex(v)
            if v in seen:
                raise ValueError(f"vertex {v} appears twice in the cover")
            seen.add(v)
            if i > 0 and not g.has_edge(path[i - 1], v):
                raise ValueError(f"({path[i - 1]},{v}) is not an edge; paths must follow edges")
            order.append(v)
    if len(seen) != g.n:
        raise ValueError("cover does not cover every vertex")
    lay = LinearLayout(g, order)
    if len(lay.holes) > npaths - 1:
        raise AssertionError("seam count exceeded cover size - 1")
    return lay


def greedy_path_cover(g: Graph) -> list[list[int]]:
    """Vertex-disjoint covering paths, grown greedily.

    Seeds are the lowest-id uncovered vertices; the path is extended from
    its tail and then its head, always into the lowest-id uncovered
    neighbor.  No optimality guarantee, just a deterministic heuristic.
    """
    covered = [False] * (g.n + 1)
    paths: list[list[int]] = []
    for seed in range(1, g.n + 1):
        if covered[seed]:
            continue
        covered[seed] = True
        path = [seed]
        grown = True
        while grown:
            grown = False
            for w in g.adj[path[-1]]:
                if not covered[w]:
                    covered[w] = True
                    path.append(w)
                    grown = True
                    break
        grown = True
        while grown:
            grown = False
            for w in g.adj[path[0]]:
                if not covered[w]:
                    covered[w] = True
                    path.insert(0, w)
                    grown = True
                    break
        paths.append(path)
    return paths


def exact_path_cover(g: Graph, limit: int = 10) -> list[list[int]]:
    """A minimum path cover by subset dynamic programming (small n only)."""
    n = g.n
    if n > limit:
        raise ValueError(f"exact cover limited to n <= {limit}")
    if n == 0:
        return []
    full = (1 << n) - 1
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u - 1] |= 1 << (v - 1)
        nbr[v - 1] |= 1 << (u - 1)

    # ends[mask] = bitmask of vertices that can end a Hamiltonian path of mask
    ends = [0] * (full + 1)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, full + 1):
        e = ends[mask]
        if not e:
            continue
        rest = full & ~mask
        v = 0
        ee = e
        while ee:
            low = ee & -ee
            v = low.bit_length() - 1
            ee ^= low
            ext = nbr[v] & rest
            while ext:
                wl = ext & -ext
                ends[mask | wl] |= wl
                ext ^= wl

    INF = n + 1
    best = [INF] * (full + 1)
    choice = [0] * (full + 1)
    best[0] = 0
    for mask in range(1, full + 1):
        low = mask & -mask
        sub = mask
        while sub:
            if (sub & low) and ends[sub]:
                cand = best[mask ^ sub] + 1
                if cand < best[mask]:
                    best[mask] = cand
                    choice[mask] = sub
            sub = (sub - 1) & mask

    def build_path(mask: int) -> list[int]:
        # peel the path back from any valid end vertex
        out: list[int] = []
        cur = mask
        e = ends[cur]
        last = (e & -e).bit_length() - 1
        while cur:
            out.append(last + 1)
            prev = cur ^ (1 << last)
            if not prev:
                break
            cand = ends[prev] & nbr[last]
            if not cand:
                raise AssertionError("path reconstruction failed")
            last = (cand & -cand).bit_length() - 1
            cur = prev
        out.reverse()
        return out

    paths = []
    mask = full
    while mask:
        sub = choice[mask]
        paths.append(build_path(sub))
        mask ^= sub
    paths.sort(key=lambda p: p[0])
    return paths


def format_layout(layout: LinearLayout) -> str:
    return f"layout {layout.g.n}\n" + " ".join(map(str, layout.order)) + "\n"


def parse_layout(text: str | bytes) -> tuple[int, list[int]]:
    """Parse the layout file format: 'layout <n>' then n vertex ids."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise ParseError("empty layout file")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "layout":
        raise ParseError("first line must be 'layout <n>'", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError("first line must be 'layout <n>'", lineno) from None
    if n < 0:
        raise ParseError("vertex count must be non-negative", lineno)
    body = [(ln, tok) for ln, line in lines[1:] for tok in line.split()]
    if len(body) != n:
        raise ParseError(f"expected {n} vertex ids, got {len(body)}", lines[-1][0])
    order = []
    for ln, tok in body:
        try:
            order.append(int(tok))
        except ValueError:
            raise ParseError("vertex ids must be integers", ln) from None
    if sorted(order) != list(range(1, n + 1)):
        raise ParseError("ids must form a permutation of 1..n", lines[-1][0])
    return n, order
