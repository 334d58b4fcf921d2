"""Connectivity labeling schemes over tours and layouts.

Two flavors of compact per-vertex labels, both answering "does deleting the
set S separate u from v?" from the labels alone.

Variant A fixes an edge set S(u) per vertex at marking time.  The marker
runs the spanning-tree engine once per vertex, deletes S(u), and stores the
outcome as a step function over tour-rank vertex ids: at most 2|S(u)|+1
runs of ids, each tagged reachable or not from u's interval.  Decoding a
pair is one binary search.

Variant B commits only to a layout and defers the choice of S to decode
time, where S is a set of deleted vertices given by their labels.  A label
stores the edges crossing the vertex's point, plus, for every hole its
crossing edges span, the full list of edges crossing that hole.  The
decoder rebuilds a coarse interval picture from the labels it was handed
and unions intervals along the edges it knows; unknown holes are exactly
the ones no relevant edge crosses, so the verdict matches the graph.  A
decode session keeps the union-find, answering later pairs without
re-decoding.  Both markers require a connected graph.
"""

from __future__ import annotations

import struct
import zlib
from bisect import bisect_right
from typing import Iterable, Mapping, Sequence

from .auxgraph import WorstCaseUnionFind
from .graph import Edge, Graph, is_connected, norm_edge
from .layout import LinearLayout, greedy_path_cover, layout_from_path_cover
from .tree_variant import TreeDecremental, min_degree_spanning_tree

__all__ = [
    "LabelA",
    "mark_with_sets",
    "decode_pair",
    "LabelB",
    "mark",
    "decode",
    "DecodeSession",
    "serialize_label",
    "parse_label",
]

_U32 = struct.Struct("<I")


def _crc_ints(tag: bytes, values: Iterable[int]) -> int:
    buf = bytearray(tag)
    for x in values:
        buf += _U32.pack(x)
    return zlib.crc32(bytes(buf))


class LabelA:
    """Per-vertex label for a fixed edge set S(u)."""

    __slots__ = ("id", "tree_id", "n", "basis", "entries")

    def __init__(self, id: int, tree_id: int, n: int, basis: int,
                 entries: Sequence[tuple[int, int, int]]):
        self.id = id
        self.tree_id = tree_id
        self.n = n
        self.basis = basis
        self.entries = tuple(entries)

    def __repr__(self) -> str:  # pragma: no cover
        return f"LabelA(id={self.id}, tree_id={self.tree_id}, entries={len(self.entries)})"


def mark_with_sets(g: Graph, sets: Mapping[int, Iterable[Edge]]) -> dict[int, LabelA]:
    """Labels for every vertex; sets maps u to S(u), missing means empty.

    Entry counts obey |entries| <= 2|S(u)| + 1.
    """
    if not is_connected(g):
        raise ValueError("marking requires a connected graph")
    for u in sets:
        g.check_vertex(u)
    tree = min_degree_spanning_tree(g)
    basis = _crc_ints(b"A", [g.n] + [c for e in sorted(tree.edges) for c in e])

    base = TreeDecremental(g, tree=tree)
    firsts = sorted(base.tour.occ[v][0] for v in range(1, g.n + 1))
    tid = {v: bisect_right(firsts, base.tour.occ[v][0]) for v in range(1, g.n + 1)}

    out: dict[int, LabelA] = {}
    for u in range(1, g.n + 1):
        s_u = {norm_edge(a, b) for a, b in sets.get(u, ())}
        for e in s_u:
            if e not in g.edges:
                raise ValueError(f"S({u}) contains non-edge {e}")
        eng = TreeDecremental(g, tree=tree)
        for a, b in sorted(s_u):
            eng.delete_edge(a, b)
        comp = eng.h.component_labels()
        home = comp[eng._locate(u)]
        entries = []
        for vid in eng.h.live_ids():
            iv = eng.h.interval(vid)
            lo_rank = bisect_right(firsts, iv.lo - 1) + 1
            hi_rank = bisect_right(firsts, iv.hi)
            if lo_rank > hi_rank:
                continue
            entries.append((lo_rank, hi_rank, 1 if comp[vid] == home else 0))
        entries.sort()
        if len(entries) > 2 * len(s_u) + 1:
            raise AssertionError("entry count exceeded 2|S|+1")
        out[u] = LabelA(u, tid[u], g.n, basis, entries)
    return out


def decode_pair(lu: LabelA, lv: LabelA) -> bool:
    """True iff S(u) separates u from v, judged from the two labels."""
    if not isinstance(lu, LabelA) or not isinstance(lv, LabelA):
        raise TypeError("decode_pair wants two LabelA values")
    if lu.basis != lv.basis:
        raise ValueError("labels come from different markings")
    t = lv.tree_id
    starts = [e[0] for e in lu.entries]
    i = bisect_right(starts, t) - 1
    lo, hi, bit = lu.entries[i]
    if not (lo <= t <= hi):
        raise AssertionError("label entries do not cover the id")
    return bit == 0


class LabelB:
    """Per-vertex label for decode-time vertex sets over a fixed layout."""

    __slots__ = ("id", "pos", "n", "basis", "crossing", "hole_records")

    def __init__(self, id: int, pos: int, n: int, basis: int,
                 crossing: Sequence[Edge],
                 hole_records: Sequence[tuple[int, tuple[Edge, ...]]]):
        self.id = id
        self.pos = pos
        self.n = n
        self.basis = basis
        self.crossing = tuple(crossing)
        self.hole_records = tuple((h, tuple(es)) for h, es in hole_records)

    def record_count(self) -> int:
        return len(self.crossing) + sum(len(es) for _, es in self.hole_records)

    def __repr__(self) -> str:  # pragma: no cover
        return f"LabelB(id={self.id}, pos={self.pos}, records={self.record_count()})"


def mark(g: Graph, layout: LinearLayout | None = None) -> dict[int, LabelB]:
    """A label per vertex over the given (or greedily covered) layout."""
    if not is_connected(g):
        raise ValueError("marking requires a connected graph")
    if layout is None:
        layout = layout_from_path_cover(g, greedy_path_cover(g))
    if layout.g.n != g.n or layout.g.edges != g.edges:
        raise ValueError("layout was built for a different graph")
    basis = _crc_ints(
        b"B",
        [g.n] + [c for e in sorted(g.edges) for c in e] + list(layout.order),
    )
    out: dict[int, LabelB] = {}
    for u in range(1, g.n + 1):
        crossing = layout.crossing_edges(u)
        records = tuple(
            (h, layout.edges_crossing_gap(h)) for h in layout.holes_of_vertex(u)
        )
        out[u] = LabelB(u, layout.position(u), g.n, basis, crossing, records)
    return out


class DecodeSession:
    """Interval picture and union-find rebuilt from a bundle of labels.

    The deleted set S is the set of vertices behind ``s_labels``.  Pair
    queries are guaranteed for vertices whose labels were part of the
    bundle (as s_labels or extra_labels); feeding every label makes the
    session a full connectivity snapshot of the graph minus S.
    """

    def __init__(self, s_labels: Sequence[LabelB], extra_labels: Sequence[LabelB] = ()):
        bundle = list(s_labels) + list(extra_labels)
        if not bundle:
            raise ValueError("at least one label is needed")
        basis = bundle[0].basis
        n = bundle[0].n
        for l in bundle:
            if not isinstance(l, LabelB):
                raise TypeError("session wants LabelB values")
            if l.basis != basis or l.n != n:
                raise ValueError("labels come from different markings")
        self.n = n
        self.basis = basis
        self.s_pos = {l.pos for l in s_labels}

        hole_edges: dict[int, set[Edge]] = {}
        known: set[Edge] = set()
        for l in bundle:
            known.update(l.crossing)
            for h, es in l.hole_records:
                hole_edges.setdefault(h, set()).update(es)
                # hole records must feed the union too: with a sparse bundle
                # the only edges bridging a known hole can live here
                known.update(es)

        # intervals: runs of 1..n broken at S positions and at known holes
        cuts = set(hole_edges)
        ivs: list[tuple[int, int]] = []
        lo = None
        for p in range(1, n + 1):
            if p in self.s_pos:
                if lo is not None:
                    ivs.append((lo, p - 1))
                    lo = None
                continue
            if lo is None:
                lo = p
            if p in cuts:
                ivs.append((lo, p))
                lo = None
        if lo is not None:
            ivs.append((lo, n))
        self._starts = [a for a, _ in ivs]
        self._ivs = ivs
        self.uf = WorstCaseUnionFind(range(len(ivs)))
        for a, b in known:
            if a in self.s_pos or b in self.s_pos:
                continue
            self.uf.union(self._iv_at(a), self._iv_at(b))

    def _iv_at(self, p: int) -> int:
        if p in self.s_pos:
            raise ValueError(f"position {p} belongs to a deleted vertex")
        i = bisect_right(self._starts, p) - 1
        if i < 0 or not (self._ivs[i][0] <= p <= self._ivs[i][1]):
            raise AssertionError("position not covered")
        return i

    def intervals(self) -> list[tuple[int, int]]:
        return list(self._ivs)

    def cut(self, lu: LabelB, lv: LabelB) -> bool:
        """True iff S separates u from v."""
        for l in (lu, lv):
            if l.basis != self.basis:
                raise ValueError("labels come from different markings")
            if l.pos in self.s_pos:
                raise ValueError(f"vertex {l.id} is in the deleted set")
        if lu.pos == lv.pos:
            return False
        return self.uf.find(self._iv_at(lu.pos)) != self.uf.find(self._iv_at(lv.pos))

    def connected(self, lu: LabelB, lv: LabelB) -> bool:
        return not self.cut(lu, lv)


def decode(lu: LabelB, lv: LabelB, s_labels: Sequence[LabelB]) -> bool:
    """One-shot decode: True iff deleting S disconnects u from v."""
    return DecodeSession(s_labels, (lu, lv)).cut(lu, lv)


# -- serialization ---------------------------------------------------------

_TAG_A = 1
_TAG_B = 2


def serialize_label(label: LabelA | LabelB) -> bytes:
    """Length-prefixed little-endian u32 wire form."""
    w = bytearray()

    def put(*xs: int) -> None:
        for x in xs:
            w.extend(_U32.pack(x))

    if isinstance(label, LabelA):
        put(_TAG_A, label.n, label.basis, label.id, label.tree_id, len(label.entries))
        for lo, hi, bit in label.entries:
            put(lo, hi, bit)
    elif isinstance(label, LabelB):
        put(_TAG_B, label.n, label.basis, label.id, label.pos, len(label.crossing))
        for a, b in label.crossing:
            put(a, b)
        put(len(label.hole_records))
        for h, es in label.hole_records:
            put(h, len(es))
            for a, b in es:
                put(a, b)
    else:
        raise TypeError("unknown label type")
    return bytes(w)


def parse_label(data: bytes) -> LabelA | LabelB:
    if len(data) % 4:
        raise ValueError("truncated label")
    words = [x[0] for x in _U32.iter_unpack(data)]
    it = iter(words)

    def take() -> int:
        try:
            return next(it)
        except StopIteration:
            raise ValueError("truncated label") from None

    tag = take()
    if tag == _TAG_A:
        n, basis, vid, tree_id, cnt = (take() for _ in range(5))
        entries = [(take(), take(), take()) for _ in range(cnt)]
        label: LabelA | LabelB = LabelA(vid, tree_id, n, basis, entries)
    elif tag == _TAG_B:
        n, basis, vid, pos, cnt = (take() for _ in range(5))
        crossing = [(take(), take()) for _ in range(cnt)]
        holes = []
        for _ in range(take()):
            h, m = take(), take()
            holes.append((h, tuple((take(), take()) for _ in range(m))))
        label = LabelB(vid, pos, n, basis, crossing, holes)
    else:
        raise ValueError(f"unknown label tag {tag}")
    if any(True for _ in it):
        raise ValueError("trailing bytes after label")
    return label
