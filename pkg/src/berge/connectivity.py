"""Articulation structure of incidence bigraphs.

Bigraph nodes are tagged tuples: ``("vertex", v)`` for a vertex of the
hypergraph and ``("edge", i)`` for its ``i``-th edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .hypergraph import Hypergraph, LayeredBigraph, incidence_bigraph, is_happy, mask_of

DISCONNECTED = "disconnected"


def _tag(node: int, ny: int) -> tuple[str, int]:
    return ("vertex", node) if node < ny else ("edge", node - ny)


def _components(adj: list[list[int]], alive: list[bool]) -> list[list[int]]:
    comp_of = [-1] * len(adj)
    comps = []
    for s in range(len(adj)):
        if not alive[s] or comp_of[s] >= 0:
            continue
        comp_of[s] = len(comps)
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if alive[w] and comp_of[w] < 0:
                    comp_of[w] = len(comps)
                    stack.append(w)
                    comp.append(w)
        comps.append(comp)
    return comps


def _tarjan(adj: list[list[int]], root: int):
    """Lowpoint DFS from ``root``: articulation points and biconnected blocks (node sets)."""
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    blocks: list[set[int]] = []
    edge_stack: list[tuple[int, int]] = []
    disc[root] = low[root] = 0
    counter = 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] < 0:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((u, w))
                stack.append((w, u, iter(adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent < 0:
            continue
        low[parent] = min(low[parent], low[u])
        if low[u] >= disc[parent]:
            if parent == root:
                root_children += 1
            else:
                cuts.add(parent)
            block: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                block.update((a, b))
                if (a, b) == (parent, u):
                    break
            blocks.append(block)
    if root_children >= 2:
        cuts.add(root)
    return cuts, blocks, disc


def cut_nodes(b: LayeredBigraph):
    """Articulation nodes of a connected bigraph, or :data:`DISCONNECTED`."""
    adj = b.flat_adjacency()
    if not adj:
        return set()
    cuts, _, disc = _tarjan(adj, 0)
    if any(d < 0 for d in disc):
        return DISCONNECTED
    ny = len(b.y_nodes)
    return {_tag(c, ny) for c in cuts}


def is_connected(h: Hypergraph) -> bool:
    adj = incidence_bigraph(h).flat_adjacency()
    return len(_components(adj, [True] * len(adj))) <= 1


def is_2connected(h: Hypergraph) -> bool:
    b = incidence_bigraph(h)
    if b.order < 4:
        return False
    cuts = cut_nodes(b)
    return cuts != DISCONNECTED and not cuts


@dataclass
class BlockDecomposition:
    """Blocks of the incidence bigraph and the hypergraph blocks they induce.

    ``hyper_blocks`` holds ``(edge indices, vertex set)`` pairs: one per
    bigraph block containing a cycle, plus one per edge lying in no such block.
    """

    blocks: list[frozenset] = field(default_factory=list)
    cut_nodes: list[tuple[str, int]] = field(default_factory=list)
    hyper_blocks: list[tuple[tuple[int, ...], frozenset]] = field(default_factory=list)

    def sub_hypergraphs(self, h: Hypergraph) -> list[Hypergraph]:
        return [h.edge_subset(edges) for edges, _ in self.hyper_blocks]


def blocks(h: Hypergraph):
    """Block decomposition of a connected hypergraph, or :data:`DISCONNECTED`."""
    b = incidence_bigraph(h)
    adj = b.flat_adjacency()
    ny = h.n
    if not adj:
        return BlockDecomposition()
    cuts, raw, disc = _tarjan(adj, 0)
    if any(d < 0 for d in disc):
        return DISCONNECTED
    out = BlockDecomposition()
    out.cut_nodes = sorted(_tag(c, ny) for c in cuts)
    covered: set[int] = set()
    for blk in raw:
        out.blocks.append(frozenset(_tag(x, ny) for x in blk))
        if len(blk) <= 2:
            continue
        edges = tuple(sorted(x - ny for x in blk if x >= ny))
        covered.update(edges)
        out.hyper_blocks.append((edges, frozenset(v for i in edges for v in h.edges[i])))
    for i, e in enumerate(h.edges):
        if i not in covered:
            out.hyper_blocks.append(((i,), frozenset(e)))
    out.hyper_blocks.sort(key=lambda hb: hb[0])
    return out


@dataclass(frozen=True)
class TwoBlock:
    vertices: frozenset
    edges: tuple[int, ...]
    outer: tuple[int, int]
    separating_edge: int
    special: bool

    @property
    def interior(self) -> frozenset:
        return self.vertices - set(self.outer)

    @property
    def outside_edge(self) -> int | None:
        return self.separating_edge if self.special else None


def separated_pieces(h: Hypergraph, edge: int | None = None):
    """Pieces cut off by a vertex ``x`` together with an edge ``a``.

    For each vertex ``x`` and edge ``a`` (only ``edge`` when given) the
    components of ``I(h) - {x, a}`` are examined. A component whose vertices
    meet ``a`` in exactly one vertex ``y`` yields ``(x, a, y, vertices, edges)``
    where ``vertices`` is the component's vertex set plus ``x``. The piece must
    leave something outside, ``x`` must have an edge leaving it, and the
    induced sub-hypergraph must be 2-connected.
    """
    adj = incidence_bigraph(h).flat_adjacency()
    ny = h.n
    masks = h.masks
    edge_range = range(h.m) if edge is None else [edge]
    for x in range(h.n):
        for ai in edge_range:
            alive = [True] * len(adj)
            alive[x] = False
            alive[ny + ai] = False
            for comp in _components(adj, alive):
                ys = [c for c in comp if c < ny]
                es = tuple(sorted(c - ny for c in comp if c >= ny))
                meet = [v for v in ys if masks[ai] >> v & 1]
                if len(meet) != 1:
                    continue
                y = meet[0]
                piece = frozenset(ys) | {x}
                vm = mask_of(piece)
                if masks[ai] & vm == masks[ai] or vm == h.vertex_mask:
                    continue
                if all(masks[i] & vm == masks[i] for i in h.incidence[x]):
                    continue
                sub = h.edge_subset(es)
                if sub.n != len(piece) or not is_2connected(sub):
                    continue
                yield x, ai, y, piece, es


def two_blocks(h: Hypergraph) -> list[TwoBlock]:
    """2-connected sub-hypergraphs with exactly two vertices touching the rest.

    Candidates come from :func:`separated_pieces`. Special 2-blocks are only
    defined inside an unhappy hypergraph; there the block must be happy, its
    second outer vertex ``y`` must lie in exactly one outside edge ``a``, and
    ``x`` must not lie in ``a``.
    """
    unhappy_host = not is_happy(h)
    masks = h.masks
    found: dict[tuple, TwoBlock] = {}
    for x, ai, y, piece, es in separated_pieces(h):
        key = (piece, x, y)
        if key in found:
            continue
        vm = mask_of(piece)
        outside_at_y = [i for i in h.incidence[y] if masks[i] & vm != masks[i]]
        special = (
            unhappy_host
            and outside_at_y == [ai]
            and not masks[ai] >> x & 1
            and is_happy(h.edge_subset(es))
        )
        found[key] = TwoBlock(piece, es, (x, y), ai, special)
    return sorted(found.values(), key=lambda tb: (sorted(tb.vertices), tb.outer))


def special_2blocks(h: Hypergraph) -> list[TwoBlock]:
    return [tb for tb in two_blocks(h) if tb.special]


def components_without(h: Hypergraph, vertices: Iterable[int] = (), edges: Iterable[int] = ()) -> list[tuple[frozenset, tuple[int, ...]]]:
    """Components of ``I(h)`` after deleting the given nodes, as (vertex set, edge indices)."""
    adj = incidence_bigraph(h).flat_adjacency()
    alive = [True] * len(adj)
    for v in vertices:
        alive[v] = False
    for i in edges:
        alive[h.n + i] = False
    out = []
    for comp in _components(adj, alive):
        out.append((frozenset(c for c in comp if c < h.n), tuple(sorted(c - h.n for c in comp if c >= h.n))))
    return out
