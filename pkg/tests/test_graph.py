import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epos.catalog import complete, named, path
from epos.enumeration import connected_graphs
from epos.graph import (
    Graph,
    GraphError,
    edge_text_decode,
    edge_text_encode,
    g6_decode,
    g6_encode,
    read_g6_lines,
)


@st.composite
def graphs(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


def test_from_edges_claw():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert g.n == 4 and g.num_edges == 3
    assert g.degrees() == [3, 1, 1, 1]


def test_duplicate_edges_collapse():
    assert Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)]).num_edges == 1


def test_single_vertex():
    g = Graph.from_edges(1, [])
    assert g.n == 1 and g.edges() == []


@pytest.mark.parametrize("edges", [[(0, 1), (1, 1)], [(0, 6)], [(-1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphError):
        Graph.from_edges(6 if edges != [(0, 6)] else 6, edges)


def test_asymmetric_rows_rejected():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_complement_examples():
    assert complete(3).complement() == Graph.empty(3)
    assert named("net").complement() == named("sun3")


@given(graphs(max_n=12))
def test_complement_involution(g):
    assert g.complement().complement() == g


def test_induced():
    claw = named("claw")
    assert claw.induced([1, 2, 3]) == Graph.empty(3)
    assert claw.induced(range(4)) == claw
    net = named("net")
    # triangle vertices of the net are 1, 2, 4 in zero-based labels
    assert net.induced([1, 2, 4]) == complete(3)


def test_induced_preserves_label_order():
    g = path(4)
    # vertices 3, 1, 2 -> relabelled 1->0, 2->1, 3->2
    assert g.induced([3, 1, 2]).edges() == [(0, 1), (1, 2)]


def test_connectivity():
    assert named("net").is_connected()
    two_k2 = named("2K2")
    assert not two_k2.is_connected()
    assert two_k2.components() == [(0, 1), (2, 3)]
    assert complete(1).is_connected()
    with pytest.raises(GraphError):
        Graph.empty(0).is_connected()


def test_bfs_layers_examples():
    assert [len(x) for x in path(4).bfs_layers(0).layers] == [1, 1, 1, 1]
    assert [len(x) for x in complete(5).bfs_layers(2).layers] == [1, 4]
    net = named("net")
    pendant = 0  # figure vertex 1
    assert [len(x) for x in net.bfs_layers(pendant).layers] == [1, 1, 2, 2]
    layers = named("2K2").bfs_layers(0)
    assert layers.unreachable == (2, 3)


@given(graphs(max_n=10, min_n=1), st.data())
def test_bfs_layers_partition_component(g, data):
    w = data.draw(st.integers(0, g.n - 1))
    res = g.bfs_layers(w)
    flat = [v for layer in res.layers for v in layer]
    comp = next(c for c in g.components() if w in c)
    assert sorted(flat) == list(comp)
    assert sorted(flat + list(res.unreachable)) == list(range(g.n))
    dist = nx.single_source_shortest_path_length(_nx_graph(g), w)
    for i, layer in enumerate(res.layers):
        assert all(dist[v] == i for v in layer)
        if i:
            assert any(g.has_edge(u, v) for u in res.layers[i - 1] for v in layer)


def test_g6_single_vertex():
    assert g6_decode("@") == Graph.empty(1)


def test_g6_examples():
    assert g6_encode(complete(2)) == "A_"
    assert g6_encode(Graph.empty(2)) == "A?"


def _nx_graph(g):
    h = nx.empty_graph(g.n)
    h.add_edges_from(g.edges())
    return h


@given(graphs(max_n=20, min_n=1))
def test_g6_matches_reference_codec(g):
    ref = nx.to_graph6_bytes(_nx_graph(g), header=False).decode().strip()
    assert g6_encode(g) == ref
    assert g6_decode(ref) == g


def test_g6_roundtrip_all_small():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            assert g6_decode(g6_encode(g)) == g


def test_g6_roundtrip_connected_up_to_6():
    for n in range(1, 7):
        for g in connected_graphs(n):
            assert g6_decode(g6_encode(g)) == g


@pytest.mark.parametrize("bad", ["", "A", "A__", "A\x7f", "A`", "?", "~"])
def test_g6_errors(bad):
    with pytest.raises(GraphError):
        g6_decode(bad)


def test_g6_header_and_lines():
    assert g6_decode(">>graph6<<A_") == complete(2)
    got = list(read_g6_lines(["A_\n", "\n", "A?\n"]))
    assert got == [complete(2), Graph.empty(2)]


def test_g6_size_limits():
    with pytest.raises(GraphError):
        g6_encode(Graph.empty(0))
    big = Graph.empty(62)
    assert g6_decode(g6_encode(big)) == big
    with pytest.raises(GraphError):
        Graph.empty(63)


def test_edge_text():
    claw = named("claw")
    text = edge_text_encode(claw)
    assert text == "4; 0 1; 0 2; 0 3"
    assert edge_text_decode(text) == claw
    assert edge_text_decode("3") == Graph.empty(3)
    with pytest.raises(GraphError):
        edge_text_decode("3; 0 5")


def test_relabel_and_union():
    rng = random.Random(3)
    g = named("bull")
    order = list(range(5))
    rng.shuffle(order)
    h = g.relabel(order)
    assert h.num_edges == g.num_edges
    assert all(h.has_edge(i, j) == g.has_edge(order[i], order[j]) for i in range(5) for j in range(5))
    u = complete(2).disjoint_union(complete(2))
    assert u == named("2K2")
