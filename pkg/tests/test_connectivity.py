from hypothesis import given, settings

from berge.connectivity import (
    DISCONNECTED, blocks, components_without, cut_nodes, is_2connected, is_connected, special_2blocks, two_blocks,
)
from berge.constructions import build_HCal
from berge.hypergraph import Graph, Hypergraph, incidence_bigraph

from .conftest import graphs, sperner_hypergraphs, to_nx


def H(n, edges, r=None):
    return Hypergraph.from_edges(n, edges, r)


def cuts(h):
    return cut_nodes(incidence_bigraph(h))


def test_cut_node_examples():
    # the bigraph of a path is a longer path: its edge nodes separate the end vertices too
    assert cuts(H(3, [[0, 1], [1, 2]])) == {("vertex", 1), ("edge", 0), ("edge", 1)}
    assert cuts(H(3, [[0, 1], [1, 2], [0, 2]])) == set()
    h = H(5, [[0, 1, 2], [2, 3], [3, 4], [2, 4]])
    assert ("edge", 0) in cuts(h) and ("vertex", 2) in cuts(h)
    assert h.edges[0] == (0, 1, 2)


def test_disconnected_is_reported():
    assert cuts(H(4, [[0, 1], [2, 3]])) == DISCONNECTED
    assert blocks(H(4, [[0, 1], [2, 3]])) == DISCONNECTED
    assert not is_connected(H(4, [[0, 1], [2, 3]]))


def test_2connected_examples():
    assert is_2connected(H(3, [[0, 1], [1, 2], [0, 2]]))
    assert not is_2connected(H(3, [[0, 1], [1, 2]]))
    assert is_2connected(build_HCal(8, 6, 3, 2))


@given(sperner_hypergraphs(max_n=6))
@settings(max_examples=150)
def test_cut_nodes_match_networkx_on_bigraph(h):
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(("vertex", v) for v in range(h.n))
    G.add_nodes_from(("edge", i) for i in range(h.m))
    G.add_edges_from((("edge", i), ("vertex", v)) for i, e in enumerate(h.edges) for v in e)
    got = cuts(h)
    if not nx.is_connected(G):
        assert got == DISCONNECTED
        return
    assert got == set(nx.articulation_points(G))
    assert is_2connected(h) == (G.number_of_nodes() >= 4 and not got)


@given(graphs(max_n=7, min_n=3))
@settings(max_examples=100)
def test_graph_2connectivity_matches_networkx(g):
    import networkx as nx

    G = to_nx(g)
    # a graph's incidence bigraph is its subdivision, 2-connected exactly when the graph is
    expected = g.n >= 3 and nx.is_biconnected(G)
    assert is_2connected(g) == expected


def test_blocks_examples():
    bd = blocks(H(5, [[0, 1], [1, 2], [0, 2], [2, 3], [3, 4], [2, 4]]))
    assert [sorted(vs) for _, vs in bd.hyper_blocks] == [[0, 1, 2], [2, 3, 4]]
    assert ("vertex", 2) in bd.cut_nodes
    bd = blocks(H(3, [[0, 1, 2]]))
    assert len(bd.hyper_blocks) == 1
    h = H(5, [[0, 1, 2], [0, 1], [2, 3], [3, 4], [2, 4]])
    assert h.edges == ((0, 1), (0, 1, 2), (2, 3), (2, 4), (3, 4))
    bd = blocks(h)
    assert [edges for edges, _ in bd.hyper_blocks] == [(0, 1), (2, 3, 4)]
    vs = [set(v) for _, v in bd.hyper_blocks]
    assert vs[0] & vs[1] == {2}


@given(sperner_hypergraphs(max_n=6))
@settings(max_examples=100)
def test_blocks_cover_edges_and_overlap_in_cut_nodes(h):
    bd = blocks(h)
    if bd == DISCONNECTED:
        return
    covered = sorted(i for edges, _ in bd.hyper_blocks for i in edges)
    assert covered == list(range(h.m))
    for a, b in zip(bd.blocks, bd.blocks[1:]):
        shared = a & b
        assert len(shared) <= 1 and shared <= set(bd.cut_nodes)


def k4_with_tail():
    # x=0, u1=1, u2=2, y=3, z=4, w=5
    k4 = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    return H(6, k4 + [[3, 4, 5], [0, 5], [0, 4]])


def test_special_2block_on_k4_instance():
    h = k4_with_tail()
    special = special_2blocks(h)
    assert len(special) == 1
    tb = special[0]
    assert tb.vertices == frozenset({0, 1, 2, 3}) and tb.outer == (0, 3)
    assert tb.interior == {1, 2}
    assert h.edges[tb.outside_edge] == (3, 4, 5)


def test_no_special_2block_in_happy_construction():
    assert special_2blocks(build_HCal(8, 6, 3, 2)) == []


def test_triangle_has_no_proper_2block():
    assert two_blocks(H(3, [[0, 1], [1, 2], [0, 2]])) == []


def test_two_block_outer_vertices_are_the_only_contacts():
    h = k4_with_tail()
    for tb in two_blocks(h):
        touching = {v for v in tb.vertices if any(set(e) - tb.vertices for e in h.edges if v in e)}
        assert touching == set(tb.outer)


def test_components_without():
    h = H(5, [[0, 1], [1, 2], [2, 3], [3, 4]])
    comps = components_without(h, vertices=[2])
    assert sorted(sorted(vs) for vs, _ in comps) == [[0, 1], [3, 4]]
    comps = components_without(h, edges=[1])
    assert sorted(sorted(vs) for vs, _ in comps) == [[0, 1], [2, 3, 4]]


def test_graph_helper_constructors_are_2connected():
    assert is_2connected(Graph.cycle(5)) and not is_2connected(Graph.path(5))
