"""Sperner families of small cliques: enumeration, LYM-type cap and exact maximum antichains."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .bounds import f, kpath_density_bound
from .hypergraph import Graph, members
from .matching import koenig_cover, max_matching


def lym_bound(h: int, r: int) -> int:
    if h < 0 or r < 1:
        raise ValueError("need h >= 0 and r >= 1")
    return comb(h, min(r, h // 2))


@dataclass
class CliqueFamily:
    graph: Graph
    members: list[tuple[int, ...]]
    sperner: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def problems(self, r: int) -> list[str]:
        out = []
        for c in self.members:
            if not 1 <= len(c) <= r:
                out.append(f"{c} has size outside 1..{r}")
            if any(not self.graph.has_edge(u, v) for i, u in enumerate(c) for v in c[i + 1:]):
                out.append(f"{c} is not a clique")
        if self.sperner:
            sets = [frozenset(c) for c in self.members]
            if len(set(sets)) != len(sets):
                out.append("repeated member")
            if any(a < b for a in sets for b in sets):
                out.append("members are not pairwise incomparable")
        return out


def enumerate_cliques(g: Graph, r: int, min_size: int = 1) -> CliqueFamily:
    """All cliques with ``min_size`` to ``r`` vertices, ordered by size then lexicographically."""
    if r < 1:
        raise ValueError("r must be positive")
    out: list[tuple[int, ...]] = []
    adj = g.adj

    def grow(clique: list[int], cand: int) -> None:
        if len(clique) >= min_size:
            out.append(tuple(clique))
        if len(clique) == r:
            return
        for v in members(cand):
            clique.append(v)
            grow(clique, cand & adj[v] & ~((1 << (v + 1)) - 1))
            clique.pop()

    for v in range(g.n):
        grow([v], adj[v] & ~((1 << (v + 1)) - 1))
    out.sort(key=lambda c: (len(c), c))
    return CliqueFamily(g, out)


def max_antichain(sets: list[int]) -> list[int]:
    """Indices of a maximum antichain among distinct bitmask sets under inclusion.

    A minimum chain cover corresponds to a maximum matching in the bipartite
    graph ``p -> q`` for ``p`` strictly inside ``q``; the antichain is read off
    a Koenig vertex cover of that matching.
    """
    adj = [[j for j, b in enumerate(sets) if j != i and a & b == a] for i, a in enumerate(sets)]
    m = max_matching(adj)
    cover_left, cover_right = koenig_cover(adj, m)
    chosen = [i for i in range(len(sets)) if i not in cover_left and i not in cover_right]
    assert len(chosen) == len(sets) - len(m)
    return chosen


def max_sperner_cliques(g: Graph, r: int, include_singletons: bool = True) -> tuple[int, CliqueFamily]:
    """``N_Sp(g, r)``: largest antichain of cliques with at most ``r`` vertices."""
    fam = enumerate_cliques(g, r, 1 if include_singletons else 2)
    sets = [sum(1 << v for v in c) for c in fam.members]
    chosen = max_antichain(sets)
    return len(chosen), CliqueFamily(g, [fam.members[i] for i in chosen], sperner=True)


@dataclass
class NspReport:
    n: int
    k: int
    r: int
    status: str
    nsp: int | None = None
    cycle_bound: int | None = None
    path_density_bound: object = None  # Fraction
    circumference: int | None = None
    cycle_bound_holds: bool | None = None
    path_bound_exceeded: bool | None = None
    k_path_connected: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status != "FAILURE"


def nsp_bound_check(g: Graph, k: int, r: int) -> NspReport:
    """Compare ``N_Sp(g, r)`` with the clique-family bound and the path-connectivity threshold."""
    from .connectivity import is_2connected
    from .search import graph_circumference, is_k_path_connected

    rep = NspReport(g.n, k, r, "holds")
    if not is_2connected(g):
        rep.status = "out-of-domain"
        rep.notes.append("graph is not 2-connected")
        return rep
    rep.nsp, _ = max_sperner_cliques(g, r)
    rep.circumference = graph_circumference(g)
    t = (k - 1) // 2
    if g.n >= k >= 5 and rep.circumference < k:
        rep.cycle_bound = max(f(g.n, k, r, 2), f(g.n, k, r, t))
        rep.cycle_bound_holds = rep.nsp <= rep.cycle_bound
        if not rep.cycle_bound_holds:
            rep.status = "FAILURE"
            rep.notes.append(f"N_Sp={rep.nsp} exceeds {rep.cycle_bound}")
    else:
        rep.notes.append("cycle bound needs n >= k >= 5 and no cycle of length k or longer")
    if g.n >= 4 and k >= 4:
        rep.path_density_bound = kpath_density_bound(g.n, k, r)
        rep.path_bound_exceeded = rep.nsp > rep.path_density_bound
        if rep.path_bound_exceeded:
            rep.k_path_connected = is_k_path_connected(g, k)
            if not rep.k_path_connected:
                rep.status = "FAILURE"
                rep.notes.append("density threshold exceeded but graph is not k-path connected")
    else:
        rep.notes.append("path-connectivity threshold needs n >= 4 and k >= 4")
    if rep.cycle_bound is None and rep.path_density_bound is None:
        rep.status = "out-of-domain"
    return rep
