"""Decremental vertex deletion over a linear layout."""

import itertools
import random

import pytest

from decrem.graph import Graph, oracle_connected
from decrem.layout import LinearLayout, exact_path_cover, layout_from_path_cover
from decrem.vertex_deletion import LayoutDecremental

from conftest import all_graphs, connected_graphs


def test_path_middle_deletion():
    g = Graph(5, [(i, i + 1) for i in range(1, 5)])
    eng = LayoutDecremental(g)
    assert eng.connected(1, 5)
    eng.delete_vertex(3)
    assert eng.is_deleted(3)
    assert not eng.connected(2, 4)
    assert eng.connected(1, 2)
    assert eng.connected(4, 5)
    assert not eng.connected_all()
    assert eng.h_size() <= eng.deletions + len(eng.layout.holes) + 1


def test_query_deleted_vertex_is_an_error():
    g = Graph(3, [(1, 2), (2, 3)])
    eng = LayoutDecremental(g)
    eng.delete_vertex(2)
    with pytest.raises(ValueError, match="was deleted"):
        eng.connected(1, 2)
    with pytest.raises(ValueError, match="already deleted"):
        eng.delete_vertex(2)
    with pytest.raises(ValueError):
        eng.connected(0, 1)


def test_rejects_foreign_layout():
    g = Graph(3, [(1, 2), (2, 3)])
    other = Graph(3, [(1, 2), (1, 3)])
    lay = LinearLayout(other, [2, 1, 3])
    with pytest.raises(ValueError, match="different graph"):
        LayoutDecremental(g, layout=lay)


def test_exhaustive_small_graphs_all_layouts():
    for g in all_graphs(3):
        for order in itertools.permutations(range(1, 4)):
            lay = LinearLayout(g, order)
            for seq in itertools.permutations(range(1, 4), 2):
                eng = LayoutDecremental(g, layout=lay)
                dead = []
                for u in seq:
                    eng.delete_vertex(u)
                    dead.append(u)
                    live = [v for v in range(1, 4) if v not in dead]
                    for a, b in itertools.combinations(live, 2):
                        want = oracle_connected(
                            g, removed_vertices=dead, u=a, v=b
                        )
                        assert eng.connected(a, b) == want


def test_connected_graphs_n4_sample_orders_vs_oracle():
    rng = random.Random(9)
    for g in connected_graphs(4):
        for _ in range(2):
            order = list(range(1, 5))
            rng.shuffle(order)
            lay = LinearLayout(g, order)
            kill = list(range(1, 5))
            rng.shuffle(kill)
            eng = LayoutDecremental(g, layout=lay)
            dead = []
            for u in kill[:3]:
                eng.delete_vertex(u)
                dead.append(u)
                assert eng.h_size() <= len(dead) + len(lay.holes) + 1
                assert eng.max_h_degree() <= 2 * max(lay.cutwidth(), 1)
                live = [v for v in range(1, 5) if v not in dead]
                for a, b in itertools.combinations(live, 2):
                    want = oracle_connected(g, removed_vertices=dead, u=a, v=b)
                    assert eng.connected(a, b) == want


def test_lazy_matches_eager_on_connected_graphs():
    rng = random.Random(21)
    for g in connected_graphs(4):
        order = list(range(1, 5))
        rng.shuffle(order)
        lay = LinearLayout(g, order)
        eager = LayoutDecremental(g, layout=lay)
        lazy = LayoutDecremental(g, layout=lay, lazy_holes=True)
        kill = list(range(1, 5))
        rng.shuffle(kill)
        for u in kill[:2]:
            eager.delete_vertex(u)
            lazy.delete_vertex(u)
            assert eager.vertex_labels().keys() == lazy.vertex_labels().keys()
            live = sorted(eager.vertex_labels())
            for a, b in itertools.combinations(live, 2):
                assert eager.connected(a, b) == lazy.connected(a, b)


def test_lazy_requires_connected_graph_but_eager_does_not():
    g = Graph(4, [(1, 2), (3, 4)])
    with pytest.raises(ValueError, match="connected"):
        LayoutDecremental(g, lazy_holes=True)
    eng = LayoutDecremental(g)
    assert eng.connected(1, 2)
    assert not eng.connected(2, 3)
    eng.delete_vertex(1)
    assert eng.connected(3, 4)


def test_deleting_everything_empties_h():
    g = Graph(3, [(1, 2), (2, 3)])
    eng = LayoutDecremental(g)
    for u in (2, 1, 3):
        eng.delete_vertex(u)
    assert eng.h_size() == 0
    assert eng.vertex_labels() == {}
    assert eng.connected_all()


def test_path_cover_layout_is_default():
    g = Graph(6, [(1, 2), (2, 3), (4, 5), (5, 6), (1, 6)])
    eng = LayoutDecremental(g)
    # the default layout concatenates greedy cover paths
    assert sorted(eng.layout.order) == list(range(1, 7))
    exact = layout_from_path_cover(g, exact_path_cover(g))
    eng2 = LayoutDecremental(g, layout=exact)
    for e in ((1, 3), (2, 5)):
        assert eng2.connected(*e) == oracle_connected(g, u=e[0], v=e[1])


def test_vertex_labels_partition_matches_oracle():
    g = Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 5)])
    eng = LayoutDecremental(g)
    eng.delete_vertex(3)
    eng.delete_vertex(5)
    labels = eng.vertex_labels()
    assert set(labels) == {1, 2, 4, 6}
    for a, b in itertools.combinations(sorted(labels), 2):
        want = oracle_connected(g, removed_vertices=[3, 5], u=a, v=b)
        assert (labels[a] == labels[b]) == want
