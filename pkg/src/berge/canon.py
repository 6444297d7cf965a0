"""Canonical forms of small coloured graphs by individualisation and refinement.

Branches are pruned with the cheapest automorphisms there are: transpositions
of twin vertices. Good enough for the desk-scale sizes used here.
"""

from __future__ import annotations

from typing import Sequence

from .hypergraph import Graph, Hypergraph, members


def _refine(cells: list[list[int]], adj: Sequence[int]) -> list[list[int]]:
    """Coarsest equitable refinement; sub-cells are ordered by label-free signatures."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(bin(adj[v] & m).count("1") for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            out.extend(groups[s] for s in sorted(groups))
        cells = out
        if not changed:
            return cells


def _certificate(order: list[int], adj: Sequence[int], colors: Sequence[int]) -> tuple:
    pos = {v: i for i, v in enumerate(order)}
    bits = 0
    n = len(order)
    for v in order:
        i = pos[v]
        for w in members(adj[v]):
            j = pos[w]
            if j > i:
                bits |= 1 << (i * n + j)
    return tuple(colors[v] for v in order), bits


def _twins(u: int, v: int, adj: Sequence[int]) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def canonical_order(adj: Sequence[int], colors: Sequence[int] | None = None) -> tuple[tuple, list[int]]:
    """``(certificate, order)``: equal certificates iff the coloured graphs are isomorphic."""
    n = len(adj)
    if colors is None:
        colors = [0] * n
    start: dict = {}
    for v in range(n):
        start.setdefault(colors[v], []).append(v)
    cells = [start[c] for c in sorted(start)]
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(cells, adj)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            order = [c[0] for c in cells]
            cert = _certificate(order, adj, colors)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[idx]
        tried: list[int] = []
        for v in cell:
            if any(_twins(u, v, adj) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    if n:
        search(cells)
    else:
        best = [((), 0), []]
    return best[0], best[1]


def graph_certificate(g: Graph) -> tuple:
    return (g.n,) + canonical_order(g.adj)[0]


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_order(g.adj)
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges])


def _bigraph_adj(h: Hypergraph) -> tuple[list[int], list[int]]:
    n = h.n
    adj = [0] * (n + h.m)
    for i, e in enumerate(h.edges):
        for v in e:
            adj[v] |= 1 << (n + i)
            adj[n + i] |= 1 << v
    return adj, [0] * n + [1] * h.m


def hypergraph_certificate(h: Hypergraph) -> tuple:
    adj, colors = _bigraph_adj(h)
    return (h.n, h.m) + canonical_order(adj, colors)[0]


def canonical_hypergraph(h: Hypergraph) -> Hypergraph:
    adj, colors = _bigraph_adj(h)
    _, order = canonical_order(adj, colors)
    pos = {v: i for i, v in enumerate(x for x in order if x < h.n)}
    return Hypergraph.from_edges(h.n, [[pos[v] for v in e] for e in h.edges], h.r)
