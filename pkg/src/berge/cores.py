"""Disintegration of graphs into cores and the long-cycle structure dichotomy."""

from __future__ import annotations

from dataclasses import dataclass, field

from .hypergraph import Graph, members


@dataclass(frozen=True)
class DisintegrationTrace:
    alpha: int
    removal_order: tuple[tuple[int, int], ...]  # (vertex, degree when removed)
    core: frozenset

    def problems(self, g: Graph) -> list[str]:
        out = []
        alive = g.vertex_mask
        for v, d in self.removal_order:
            real = bin(g.adj[v] & alive).count("1")
            if real != d or d > self.alpha:
                out.append(f"vertex {v} removed with degree {real}")
            alive &= ~(1 << v)
        if set(members(alive)) != set(self.core):
            out.append("core does not match the survivors")
        if any(bin(g.adj[v] & alive).count("1") <= self.alpha for v in members(alive)):
            out.append("core still has a vertex of degree at most alpha")
        return out


def disintegrate(g: Graph, alpha: int, highest_first: bool = False) -> DisintegrationTrace:
    """Repeatedly delete a vertex of degree at most ``alpha``, lowest index first by default."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    alive = g.vertex_mask
    deg = [bin(a).count("1") for a in g.adj]
    order = []
    while True:
        eligible = [v for v in members(alive) if deg[v] <= alpha]
        if not eligible:
            break
        v = eligible[-1] if highest_first else eligible[0]
        order.append((v, deg[v]))
        alive &= ~(1 << v)
        for w in members(g.adj[v] & alive):
            deg[w] -= 1
    return DisintegrationTrace(alpha, tuple(order), frozenset(members(alive)))


def core(g: Graph, alpha: int) -> frozenset:
    return disintegrate(g, alpha).core


@dataclass
class KopylovReport:
    k: int
    t: int
    case: str  # "disintegrable", "core" or "out-of-scope"
    s: int | None = None
    equality_check: bool | None = None
    circumference: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        if self.case == "disintegrable":
            return True
        if self.case == "core":
            return self.equality_check is True and self.t + 2 <= self.s <= self.k - 2
        return True


def kopylov_case(g: Graph, k: int, circumference: int | None = None) -> KopylovReport:
    """Classify a 2-connected graph without cycles of length ``k`` or more by its ``t``-core.

    ``circumference`` may be passed when already known; otherwise it is computed.
    """
    from .connectivity import is_2connected
    from .search import graph_circumference

    t = (k - 1) // 2
    rep = KopylovReport(k, t, "out-of-scope")
    if not g.n >= k >= 5:
        rep.notes.append("needs n >= k >= 5")
        return rep
    if not is_2connected(g):
        rep.notes.append("graph is not 2-connected")
        return rep
    rep.circumference = graph_circumference(g) if circumference is None else circumference
    if rep.circumference >= k:
        rep.notes.append(f"circumference {rep.circumference} is not below {k}")
        return rep
    ct = core(g, t)
    if not ct:
        rep.case = "disintegrable"
        return rep
    rep.case = "core"
    rep.s = len(ct)
    if rep.s > k:
        rep.equality_check = False
        rep.notes.append(f"core of size {rep.s} exceeds k")
        return rep
    rep.equality_check = core(g, k - rep.s) == ct
    if not rep.holds:
        rep.notes.append(f"dichotomy violated: s={rep.s}, equal cores={rep.equality_check}")
    return rep
