"""Exact longest Berge cycles and paths, path connectivity, and lifting of shadow cycles.

The hypergraph search walks base-vertex sequences in ascending order and keeps
an incremental system of distinct representatives for the consecutive pairs,
so two sequences are never explored twice because of different edge choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .hypergraph import Graph, Hypergraph, is_happy, is_sperner, members
from .matching import matching_cover


@dataclass(frozen=True)
class BergeWitness:
    kind: str  # "cycle" or "path"
    base_vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_indices)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "base_vertices": list(self.base_vertices), "edge_indices": list(self.edge_indices)}


def check_witness(h: Hypergraph, w: BergeWitness) -> list[str]:
    """Problems with ``w`` as a Berge cycle or path of ``h``; empty when it is valid."""
    problems = []
    vs, es = w.base_vertices, w.edge_indices
    if w.kind == "cycle":
        if len(vs) != len(es):
            problems.append("cycle needs as many edges as base vertices")
        if len(es) < 2:
            problems.append("cycle length below 2")
        pairs = [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))] if vs else []
    elif w.kind == "path":
        if len(vs) != len(es) + 1:
            problems.append("path needs one more base vertex than edges")
        if len(es) < 1:
            problems.append("path length below 1")
        pairs = list(zip(vs, vs[1:]))
    else:
        return [f"unknown witness kind {w.kind!r}"]
    if len(set(vs)) != len(vs):
        problems.append("base vertices repeat")
    if len(set(es)) != len(es):
        problems.append("edges repeat")
    if any(i < 0 or i >= h.m for i in es):
        return problems + ["edge index out of range"]
    for (u, v), i in zip(pairs, es):
        if u not in h.edges[i] or v not in h.edges[i]:
            problems.append(f"edge {i} misses pair {u},{v}")
    return problems


class _SDR:
    """Incremental matching of vertex pairs to distinct edges containing them."""

    def __init__(self, h: Hypergraph):
        self.masks = h.masks
        self.owner: dict[int, int] = {}  # edge -> slot
        self.slots: list[int] = []  # slot -> pair mask
        self._saved: list[dict] = []

    def _try(self, slot: int, seen: set) -> bool:
        pm = self.slots[slot]
        for i, em in enumerate(self.masks):
            if em & pm != pm or i in seen:
                continue
            seen.add(i)
            o = self.owner.get(i)
            if o is None or self._try(o, seen):
                self.owner[i] = slot
                return True
        return False

    def push(self, u: int, v: int) -> bool:
        self.slots.append(1 << u | 1 << v)
        saved = dict(self.owner)
        if self._try(len(self.slots) - 1, set()):
            self._saved.append(saved)
            return True
        self.slots.pop()
        self.owner = saved
        return False

    def pop(self) -> None:
        self.slots.pop()
        self.owner = self._saved.pop()

    def edges_in_order(self) -> tuple[int, ...]:
        by_slot = {s: i for i, s in self.owner.items()}
        return tuple(by_slot[s] for s in range(len(self.slots)))


def _shadow_adj(h: Hypergraph) -> list[int]:
    adj = [0] * h.n
    for e, m in zip(h.edges, h.masks):
        for v in e:
            adj[v] |= m & ~(1 << v)
    return adj


def circumference(h: Hypergraph, cutoff: int | None = None) -> tuple[int, BergeWitness | None]:
    """Length of a longest Berge cycle and the lexicographically least witness of that length.

    With ``cutoff`` the search stops at the first cycle of length at least
    ``cutoff``; the returned length is then only a lower bound.
    """
    adj = _shadow_adj(h)
    sdr = _SDR(h)
    best = [0, None]
    path: list[int] = []
    stop = [False]
    mmax = h.m

    def dfs(u: int, used: int, allowed: int, start: int) -> None:
        length = len(path)
        # close the cycle through an edge not yet used
        if length >= 2 and length > best[0] and adj[u] >> start & 1 and sdr.push(u, start):
            best[0] = length
            best[1] = BergeWitness("cycle", tuple(path), sdr.edges_in_order())
            sdr.pop()
            if cutoff is not None and length >= cutoff:
                stop[0] = True
                return
        free = allowed & ~used
        if length + bin(free).count("1") <= best[0] or length >= mmax:
            return
        cand = adj[u] & free
        while cand and not stop[0]:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if sdr.push(u, w):
                path.append(w)
                dfs(w, used | low, allowed, start)
                path.pop()
                sdr.pop()

    for s in range(h.n):
        if stop[0]:
            break
        allowed = h.vertex_mask & ~((1 << s) - 1)
        if bin(allowed).count("1") <= best[0]:
            break
        path.append(s)
        dfs(s, 1 << s, allowed, s)
        path.pop()
    return best[0], best[1]


def longest_berge_path(h: Hypergraph) -> tuple[int, BergeWitness | None]:
    """Length (in edges) of a longest Berge path with the lexicographically least witness."""
    adj = _shadow_adj(h)
    sdr = _SDR(h)
    best = [0, None]
    path: list[int] = []
    limit = min(h.n - 1, h.m)

    def dfs(u: int, used: int) -> bool:
        length = len(path) - 1
        if length > best[0]:
            best[0] = length
            best[1] = BergeWitness("path", tuple(path), sdr.edges_in_order())
            if length >= limit:
                return True
        cand = adj[u] & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if sdr.push(u, w):
                path.append(w)
                done = dfs(w, used | low)
                path.pop()
                sdr.pop()
                if done:
                    return True
        return False

    for s in range(h.n):
        path.append(s)
        done = dfs(s, 1 << s)
        path.pop()
        if done:
            break
    return best[0], best[1]


def longest_berge_xy_path(h: Hypergraph, x: int, y: int) -> int:
    """Most edges on a Berge path from ``x`` to ``y``; 0 when there is none."""
    if x == y:
        raise ValueError("x and y must differ")
    adj = _shadow_adj(h)
    sdr = _SDR(h)
    best = 0

    def dfs(u: int, used: int, length: int) -> None:
        nonlocal best
        if u == y:
            best = max(best, length)
            return
        cand = adj[u] & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if sdr.push(u, w):
                dfs(w, used | low, length + 1)
                sdr.pop()

    dfs(x, 1 << x, 0)
    return best


def has_berge_path_of_length(h: Hypergraph, k: int) -> bool:
    return longest_berge_path(h)[0] >= k


def graph_circumference(g: Graph) -> int:
    """Circumference of a graph by subset dynamic programming; independent of the DFS search."""
    n = g.n
    adj = g.adj
    best = 0
    for s in range(n):
        allowed = ((1 << n) - 1) & ~((1 << s) - 1)
        if bin(allowed).count("1") <= best:
            break
        reach = {1 << s: 1 << s}
        frontier = [1 << s]
        while frontier:
            nxt = {}
            for mask in frontier:
                ends = reach[mask]
                size = bin(mask).count("1")
                if size >= 3 and size > best and any(adj[v] >> s & 1 for v in members(ends)):
                    best = size
                for v in members(ends):
                    for w in members(adj[v] & allowed & ~mask):
                        nm = mask | 1 << w
                        nxt[nm] = nxt.get(nm, 0) | 1 << w
            for nm, e in nxt.items():
                reach[nm] = reach.get(nm, 0) | e
            frontier = list(nxt)
    return best


def longest_xy_path(g: Graph, x: int, y: int) -> int:
    """Most vertices on an x,y-path of ``g``; 0 if ``x`` and ``y`` are disconnected."""
    if x == y:
        raise ValueError("x and y must differ")
    adj = g.adj
    best = 0
    full = bin(g.vertex_mask).count("1")

    def dfs(u: int, used: int, count: int) -> bool:
        nonlocal best
        if u == y:
            if count > best:
                best = count
            return best == full
        cand = adj[u] & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            if dfs(low.bit_length() - 1, used | low, count + 1):
                return True
        return False

    dfs(x, 1 << x, 1)
    return best


def is_k_path_connected(g: Graph, k: int) -> bool:
    return all(longest_xy_path(g, x, y) >= k for x, y in combinations(range(g.n), 2))


def linear_forests(n: int, l: int):
    """All sets of ``l`` pairs on ``0..n-1`` forming vertex-disjoint paths."""
    pairs = list(combinations(range(n), 2))

    def rec(start: int, chosen: list, deg: list, comp: list):
        if len(chosen) == l:
            yield tuple(chosen)
            return
        for idx in range(start, len(pairs)):
            u, v = pairs[idx]
            if deg[u] >= 2 or deg[v] >= 2:
                continue
            cu, cv = _find(comp, u), _find(comp, v)
            if cu == cv:
                continue
            saved = list(comp)
            comp[cu] = cv
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(idx + 1, chosen, deg, comp)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
            comp[:] = saved

    yield from rec(0, [], [0] * n, list(range(n)))


def _find(comp: list, x: int) -> int:
    while comp[x] != x:
        x = comp[x]
    return x


def _ham_cycle_through(adj: Sequence[int], forced: Sequence[int], n: int) -> bool:
    """Hamilton cycle in ``adj`` using every forced pair (``forced[v]`` is a neighbour mask)."""
    if n < 3:
        return False
    full = (1 << n) - 1
    path = [0]

    def ok_at(v: int, a: int, b: int) -> bool:
        return forced[v] & ~(1 << a | 1 << b) == 0

    def dfs(u: int, used: int) -> bool:
        if used == full:
            return bool(adj[u] & 1) and ok_at(u, path[-2], 0) and ok_at(0, path[1], u)
        cand = adj[u] & ~used
        prev = path[-2] if len(path) >= 2 else None
        if forced[u] & ~used & ~(1 << prev if prev is not None else 0):
            # a forced neighbour of u is still unvisited: it must be next
            cand &= forced[u]
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if prev is not None and not ok_at(u, prev, w):
                continue
            path.append(w)
            if dfs(w, used | low):
                return True
            path.pop()
        return False

    return dfs(0, 1)


def is_l_hamiltonian(g: Graph, l: int) -> bool:
    """Whether every linear forest with ``l`` edges extends, inside ``g`` plus the forest, to a Hamilton cycle."""
    n = g.n
    if l < 0 or l >= n:
        raise ValueError("need 0 <= l < n")
    for forest in linear_forests(n, l):
        adj = list(g.adj)
        forced = [0] * n
        for u, v in forest:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            forced[u] |= 1 << v
            forced[v] |= 1 << u
        if not _ham_cycle_through(adj, forced, n):
            return False
    return True


def has_hamilton_cycle(g: Graph) -> bool:
    return _ham_cycle_through(g.adj, [0] * g.n, g.n)


class LiftError(ValueError):
    pass


def _lift(h: Hypergraph, seq: Sequence[int], pairs: list[tuple[int, int]], drop: int | None) -> tuple[int, ...]:
    adj = []
    for u, v in pairs:
        pm = 1 << u | 1 << v
        adj.append([i for i, m in enumerate(h.masks) if m & pm == pm and i != drop])
    res = matching_cover(adj)
    if not res.covers:
        raise LiftError(f"no matching covers the pairs of {list(seq)}; Hall violator {sorted(res.violator)}")
    return tuple(res.matching[j] for j in range(len(pairs)))


def _check_shadow_walk(h: Hypergraph, seq: Sequence[int], closed: bool) -> list[tuple[int, int]]:
    if len(set(seq)) != len(seq):
        raise LiftError("vertex sequence repeats a vertex")
    if any(v < 0 or v >= h.n for v in seq):
        raise LiftError("vertex out of range")
    pairs = list(zip(seq, seq[1:]))
    if closed:
        pairs.append((seq[-1], seq[0]))
    adj = _shadow_adj(h)
    for u, v in pairs:
        if not adj[u] >> v & 1:
            raise LiftError(f"pair {u},{v} is not in the 2-shadow")
    return pairs


def lift_shadow_cycle(h: Hypergraph, cycle: Sequence[int]) -> BergeWitness:
    """Berge cycle on the base vertices of a shadow cycle of length at least the rank."""
    cycle = list(cycle)
    if not is_sperner(h):
        raise LiftError("hypergraph is not Sperner")
    if not is_happy(h):
        raise LiftError("hypergraph is not happy")
    if len(cycle) < max(h.r, 3):
        raise LiftError(f"cycle length {len(cycle)} is below the rank {h.r}")
    pairs = _check_shadow_walk(h, cycle, True)
    drop = None
    if len(cycle) == h.r:
        base = sum(1 << v for v in cycle)
        drop = next((i for i, m in enumerate(h.masks) if m == base), None)
    return BergeWitness("cycle", tuple(cycle), _lift(h, cycle, pairs, drop))


def lift_shadow_path(h: Hypergraph, path: Sequence[int]) -> BergeWitness:
    """Berge path on the base vertices of a shadow path."""
    path = list(path)
    if not is_happy(h):
        raise LiftError("hypergraph is not happy")
    if len(path) < 2:
        raise LiftError("path needs at least two vertices")
    pairs = _check_shadow_walk(h, path, False)
    return BergeWitness("path", tuple(path), _lift(h, path, pairs, None))


def shadow_cycles(g: Graph, min_length: int = 3, limit: int | None = None):
    """Cycles of a graph, each once: smallest vertex first, second vertex below the last."""
    adj = g.adj
    count = 0
    for s in range(g.n):
        allowed = g.vertex_mask & ~((1 << (s + 1)) - 1)
        stack = [(s, [s], 1 << s)]
        while stack:
            u, path, used = stack.pop()
            if len(path) >= max(min_length, 3) and adj[u] >> s & 1 and path[1] < path[-1]:
                yield tuple(path)
                count += 1
                if limit is not None and count >= limit:
                    return
            for w in reversed(members(adj[u] & allowed & ~used)):
                stack.append((w, path + [w], used | 1 << w))
