"""Hypergraphs of bounded upper rank, their shadows and incidence bigraphs.

Vertices are ``0..n-1``. Edges are stored as sorted tuples and, in parallel,
as integer bitmasks so that subset and intersection tests are single
operations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on ``n`` vertices with edges of size at most ``r``.

    The constructor stores edges exactly as given; use :meth:`from_edges` to
    obtain the canonical form (sorted edges, lexicographic edge list).
    Duplicated or undersized edges are representable so that intermediate
    rewrites can be inspected; :func:`validate` rejects them.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], r: int | None = None):
        canon = sorted(tuple(sorted(e)) for e in edges)
        if r is None:
            r = max((len(e) for e in canon), default=2)
        return cls(n, tuple(canon), r)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def size_sum(self) -> int:
        return sum(len(e) for e in self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def is_canonical(self) -> bool:
        return all(list(e) == sorted(e) for e in self.edges) and list(self.edges) == sorted(self.edges)

    def canonical(self) -> "Hypergraph":
        return type(self).from_edges(self.n, self.edges, self.r)

    def metrics(self) -> tuple[int, int, int]:
        """``(|V|, |E|, sum of edge sizes)``."""
        return (self.n, self.m, self.size_sum)

    def induced(self, vertices: Iterable[int]) -> "Hypergraph":
        """Sub-hypergraph of all edges inside ``vertices``, relabelled in order."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        vm = mask_of(keep)
        edges = [tuple(pos[v] for v in e) for e, em in zip(self.edges, self.masks) if em & vm == em]
        return Hypergraph.from_edges(len(keep), edges, self.r)

    def edge_subset(self, indices: Iterable[int]) -> "Hypergraph":
        """Sub-hypergraph on the chosen edges, relabelled onto the vertices they cover."""
        chosen = [self.edges[i] for i in sorted(set(indices))]
        verts = sorted({v for e in chosen for v in e})
        pos = {v: i for i, v in enumerate(verts)}
        return Hypergraph.from_edges(len(verts), [[pos[v] for v in e] for e in chosen], self.r)

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict()) + "\n"


class Graph(Hypergraph):
    """A simple graph, i.e. a 2-uniform hypergraph of upper rank 2."""

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        super().__init__(n, tuple(tuple(e) for e in edges), 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], r: int | None = None):
        return cls(n, sorted({tuple(sorted(e)) for e in edges}))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return members(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])


def as_graph(h: Hypergraph) -> Graph:
    if any(len(e) != 2 for e in h.edges):
        raise ValueError("not a 2-uniform hypergraph")
    return h if isinstance(h, Graph) else Graph.from_edges(h.n, h.edges)


@dataclass
class ValidationReport:
    problems: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.valid


def validate(h: Hypergraph) -> ValidationReport:
    report = ValidationReport()
    seen: set[frozenset] = set()
    for i, e in enumerate(h.edges):
        if len(e) < 2:
            report.problems.append(f"edge {i} {list(e)} has fewer than 2 vertices")
        if len(e) > h.r:
            report.problems.append(f"edge {i} {list(e)} exceeds rank {h.r}")
        if any(v < 0 or v >= h.n for v in e):
            report.problems.append(f"edge {i} {list(e)} has a vertex outside 0..{h.n - 1}")
        if len(set(e)) != len(e):
            report.problems.append(f"edge {i} {list(e)} repeats a vertex")
        key = frozenset(e)
        if key in seen:
            report.problems.append(f"edge {i} {list(e)} is a duplicate")
        seen.add(key)
    if not h.is_canonical():
        report.problems.append("edges are not in canonical order")
    return report


def is_sperner(h: Hypergraph) -> bool:
    ms = h.masks
    for i, a in enumerate(ms):
        for j, b in enumerate(ms):
            if i != j and a & b == a:
                return False
    return True


def shadow(h: Hypergraph, p: int):
    """All ``p``-sets lying in some edge; for ``p == 2`` a :class:`Graph`."""
    if p < 1:
        raise ValueError("p must be positive")
    sets = {s for e in h.edges if len(e) >= p for s in combinations(e, p)}
    if p == 2:
        return Graph(h.n, sorted(sets))
    return sorted(sets)


def codegree(h: Hypergraph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("codegree needs two distinct vertices")
    pair = 1 << u | 1 << v
    return sum(1 for m in h.masks if m & pair == pair)


def pair_kind(h: Hypergraph, u: int, v: int) -> str:
    d = codegree(h, u, v)
    return "thick" if d >= 2 else "thin" if d == 1 else "none"


def is_happy_edge(h: Hypergraph, i: int) -> bool:
    e = h.edges[i]
    need = len(e) - 1
    return all(codegree(h, x, y) >= need for x, y in combinations(e, 2))


def unhappy_edges(h: Hypergraph) -> list[int]:
    return [i for i in range(h.m) if not is_happy_edge(h, i)]


def is_happy(h: Hypergraph) -> bool:
    return not unhappy_edges(h)


@dataclass(frozen=True)
class LayeredBigraph:
    """Bipartite graph with ordered parts: edge-nodes ``A`` and vertex-nodes ``Y``.

    ``a_nodes[i]`` lists the Y-neighbours of A-node ``i``; ``y_nodes[v]`` lists
    the A-neighbours of Y-node ``v``.
    """

    a_nodes: tuple[tuple[int, ...], ...]
    y_nodes: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.a_nodes) + len(self.y_nodes)

    def incidences(self) -> int:
        return sum(len(x) for x in self.a_nodes)

    def is_symmetric(self) -> bool:
        fwd = {(a, y) for a, ys in enumerate(self.a_nodes) for y in ys}
        back = {(a, y) for y, As in enumerate(self.y_nodes) for a in As}
        return fwd == back

    def is_sperner(self) -> bool:
        nb = [frozenset(x) for x in self.a_nodes]
        return not any(i != j and a <= b for i, a in enumerate(nb) for j, b in enumerate(nb))

    def flat_adjacency(self) -> list[list[int]]:
        """Adjacency on one node set: Y-node ``v`` is ``v``, A-node ``i`` is ``len(Y) + i``."""
        ny = len(self.y_nodes)
        adj = [[ny + a for a in As] for As in self.y_nodes]
        adj.extend(list(ys) for ys in self.a_nodes)
        return adj

    def to_hypergraph(self, r: int | None = None) -> Hypergraph:
        return Hypergraph.from_edges(len(self.y_nodes), self.a_nodes, r)


def incidence_bigraph(h: Hypergraph) -> LayeredBigraph:
    return LayeredBigraph(tuple(h.edges), h.incidence)


def from_dict(data: dict) -> Hypergraph:
    try:
        n, r, edges = data["n"], data["r"], data["edges"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"hypergraph JSON needs keys n, r, edges: {exc}") from None
    if not isinstance(n, int) or not isinstance(r, int):
        raise ValueError("n and r must be integers")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise ValueError("edges must be a list of lists")
    if r == 2 and all(len(e) == 2 for e in edges):
        return Graph(n, edges)
    return Hypergraph(n, edges, r)


def loads(text: str) -> Hypergraph:
    return from_dict(json.loads(text))


def load(path) -> Hypergraph:
    with open(path) as fh:
        return loads(fh.read())


def dump(h: Hypergraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(h.to_json())


def subsets_of_sizes(n: int, sizes: Sequence[int]) -> list[tuple[int, ...]]:
    return [c for s in sizes for c in combinations(range(n), s)]
