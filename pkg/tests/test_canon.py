import random

from hypothesis import given, settings
from hypothesis import strategies as st

from berge.canon import canonical_graph, canonical_hypergraph, graph_certificate, hypergraph_certificate
from berge.enumeration import graph_levels
from berge.hypergraph import Graph, Hypergraph

from .conftest import graphs, sperner_hypergraphs, to_nx


def relabel(h, perm):
    return type(h).from_edges(h.n, [[perm[v] for v in e] for e in h.edges], *(() if isinstance(h, Graph) else (h.r,)))


@given(graphs(max_n=9), st.randoms())
@settings(max_examples=150, deadline=None)
def test_certificate_is_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    g2 = relabel(g, perm)
    assert graph_certificate(g) == graph_certificate(g2)
    assert canonical_graph(g) == canonical_graph(g2)


@given(graphs(max_n=6), graphs(max_n=6))
@settings(max_examples=150, deadline=None)
def test_certificate_separates_non_isomorphic(g, h):
    import networkx as nx

    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (graph_certificate(g) == graph_certificate(h)) == same


@given(sperner_hypergraphs(max_n=6), st.randoms())
@settings(max_examples=100, deadline=None)
def test_hypergraph_certificate_invariant(h, rnd):
    perm = list(range(h.n))
    rnd.shuffle(perm)
    h2 = relabel(h, perm)
    assert hypergraph_certificate(h) == hypergraph_certificate(h2)
    assert canonical_hypergraph(h) == canonical_hypergraph(h2)


def test_hypergraph_certificate_distinguishes():
    a = Hypergraph.from_edges(4, [[0, 1, 2], [1, 2, 3]])
    b = Hypergraph.from_edges(4, [[0, 1, 2], [0, 3]], 3)
    assert hypergraph_certificate(a) != hypergraph_certificate(b)


def test_atlas_classes_are_distinct():
    from networkx.generators.atlas import graph_atlas_g

    certs = {graph_certificate(Graph.from_edges(G.number_of_nodes(), G.edges())) for G in graph_atlas_g()}
    assert len(certs) == len(graph_atlas_g()) == 1253


def test_augmentation_counts_match_known_sequence():
    # numbers of graphs up to isomorphism on 0..8 vertices
    levels = graph_levels(8)
    assert [len(level) for level in levels] == [1, 1, 2, 4, 11, 34, 156, 1044, 12346]
