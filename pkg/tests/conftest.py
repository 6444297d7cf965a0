"""Shared fixtures, strategies and brute-force oracles.

The oracles below deliberately share no code with the package: Berge
structures are found by trying every base-vertex order and every assignment
of distinct edges.
"""

from itertools import combinations, permutations, product

import pytest
from hypothesis import strategies as st

from berge.hypergraph import Graph, Hypergraph

WORKED = [[0, 1, 2], [0, 3], [1, 4], [2, 5], [3, 4], [4, 5]]


@pytest.fixture
def worked():
    return Hypergraph.from_edges(6, WORKED, 3)


def _distinct_edges(edge_sets, pairs):
    options = [[i for i, e in enumerate(edge_sets) if u in e and v in e] for u, v in pairs]
    return any(len(set(choice)) == len(choice) for choice in product(*options))


def brute_circumference(n, edges):
    edge_sets = [set(e) for e in edges]
    best = 0
    for length in range(2, n + 1):
        for seq in permutations(range(n), length):
            if seq[0] != min(seq):
                continue
            pairs = list(zip(seq, seq[1:] + seq[:1]))
            if _distinct_edges(edge_sets, pairs):
                best = length
                break
    return best


def brute_longest_path(n, edges):
    edge_sets = [set(e) for e in edges]
    best = 0
    for length in range(1, n):
        if any(_distinct_edges(edge_sets, list(zip(seq, seq[1:]))) for seq in permutations(range(n), length + 1)):
            best = length
    return best


def brute_is_sperner(edges):
    return all(not set(a) <= set(b) and not set(b) <= set(a) for a, b in combinations(edges, 2))


@st.composite
def sperner_hypergraphs(draw, max_n=6, max_r=3, min_n=2):
    n = draw(st.integers(min_n, max_n))
    r = draw(st.integers(2, max_r))
    pool = [c for s in range(2, r + 1) for c in combinations(range(n), s)]
    picked = draw(st.lists(st.sampled_from(pool), max_size=2 * n, unique=True))
    edges = []
    for e in picked:
        if all(not set(e) <= set(f) and not set(f) <= set(e) for f in edges):
            edges.append(e)
    return Hypergraph.from_edges(n, edges, r)


@st.composite
def graphs(draw, max_n=7, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def to_nx(g):
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G
