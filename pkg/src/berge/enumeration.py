"""Exhaustive and randomised generation of small hypergraphs.

Labeled enumeration walks edge sets in the lexicographic order of their
canonical form, so every family is visited once. Isomorph rejection for
graphs grows vertex by vertex and keeps one representative per canonical
certificate at each level.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .canon import graph_certificate, hypergraph_certificate
from .connectivity import is_2connected, is_connected
from .hypergraph import Graph, Hypergraph, is_happy, is_sperner, unhappy_edges
from .search import circumference, graph_circumference, longest_berge_path

CAPS = {"exhaustive": 7, "pruned": 10, "random": 64}


class CapExceeded(ValueError):
    pass


def cap(kind: str) -> int:
    """Hard vertex cap; the ``BERGE_CAP`` environment variable overrides every kind."""
    env = os.environ.get("BERGE_CAP")
    if env:
        return int(env)
    return CAPS[kind]


@dataclass(frozen=True)
class SearchSpace:
    n: int
    r: int
    sperner: bool = True
    connected: bool = False
    two_connected: bool = False
    objective: str | None = None  # "cycle" or "path": keep only families below k
    k: int | None = None
    dedup: str = "auto"  # "labeled", "iso" or "auto" (iso from 6 vertices on)

    def __post_init__(self):
        if self.objective not in (None, "cycle", "path"):
            raise ValueError(f"unknown objective {self.objective!r}")
        if self.objective and self.k is None:
            raise ValueError("an objective needs k")
        if self.dedup not in ("labeled", "iso", "auto"):
            raise ValueError(f"unknown dedup mode {self.dedup!r}")
        if self.r < 2 or self.n < 0:
            raise ValueError("need r >= 2 and n >= 0")

    @property
    def kind(self) -> str:
        return "pruned" if self.objective else "exhaustive"

    @property
    def iso(self) -> bool:
        return self.dedup == "iso" or (self.dedup == "auto" and self.n >= 6)

    def check_cap(self) -> None:
        limit = cap(self.kind)
        if self.n > limit:
            raise CapExceeded(f"n={self.n} exceeds the {self.kind} cap {limit}")

    def too_long(self, h: Hypergraph) -> bool:
        """Objective violated; monotone under adding edges and vertices."""
        if self.objective == "cycle":
            return circumference(h, cutoff=self.k)[0] >= self.k
        if self.objective == "path":
            return longest_berge_path(h)[0] >= self.k
        return False

    def accepts(self, h: Hypergraph) -> bool:
        if self.sperner and not is_sperner(h):
            return False
        if self.two_connected and not is_2connected(h):
            return False
        if self.connected and not is_connected(h):
            return False
        return not self.too_long(h)


@dataclass
class EnumStats:
    visited: int = 0  # families examined and not pruned
    skipped: int = 0  # families inside pruned subtrees, pruned roots included
    emitted: int = 0


def candidate_edges(n: int, r: int) -> list[tuple[int, ...]]:
    """All edges of size 2..r in the order used by canonical edge lists."""
    return sorted(c for s in range(2, r + 1) for c in combinations(range(n), s))


def _compatible(mask: int, chosen: list[int], sperner: bool) -> bool:
    if not sperner:
        return True
    return all(mask & m not in (mask, m) for m in chosen)


def _count_subtree(cands: list[int], start: int, chosen: list[int], sperner: bool) -> int:
    """Families extending ``chosen`` by later candidates, the family itself included."""
    total = 1
    for j in range(start, len(cands)):
        if _compatible(cands[j], chosen, sperner):
            chosen.append(cands[j])
            total += _count_subtree(cands, j + 1, chosen, sperner)
            chosen.pop()
    return total


def _labeled(space: SearchSpace, stats: EnumStats, shard: tuple[int, int], count_skips: bool) -> Iterator[Hypergraph]:
    edges = candidate_edges(space.n, space.r)
    cands = [sum(1 << v for v in e) for e in edges]
    index, shards = shard
    chosen_idx: list[int] = []
    chosen: list[int] = []

    def visit(start: int) -> Iterator[Hypergraph]:
        h = Hypergraph(space.n, tuple(edges[i] for i in chosen_idx), space.r)
        if space.too_long(h):
            if count_skips:
                stats.skipped += _count_subtree(cands, start, chosen, space.sperner)
            return
        stats.visited += 1
        if (not space.two_connected or is_2connected(h)) and (not space.connected or is_connected(h)):
            stats.emitted += 1
            yield h
        for j in range(start, len(cands)):
            if not chosen_idx and j % shards != index:
                continue
            if _compatible(cands[j], chosen, space.sperner):
                chosen_idx.append(j)
                chosen.append(cands[j])
                yield from visit(j + 1)
                chosen.pop()
                chosen_idx.pop()

    if index == 0:
        yield from visit(0)
    else:
        # the empty family belongs to shard 0; other shards start one level down
        for j in range(index, len(cands), shards):
            chosen_idx.append(j)
            chosen.append(cands[j])
            yield from visit(j + 1)
            chosen.pop()
            chosen_idx.pop()


def graph_levels(n: int, keep: Callable[[Graph], bool] = lambda g: True) -> list[list[Graph]]:
    """Graphs on ``0..n`` vertices up to isomorphism, restricted to a hereditary property ``keep``.

    Level ``i`` is built from level ``i-1`` by adding a vertex with every
    possible neighbourhood; a certificate set keeps one graph per class.
    """
    levels = [[Graph(0, ())]] if keep(Graph(0, ())) else [[]]
    for size in range(1, n + 1):
        seen: set = set()
        out: list[Graph] = []
        new = size - 1
        for g in levels[-1]:
            for nb in range(1 << new):
                edges = list(g.edges) + [(w, new) for w in range(new) if nb >> w & 1]
                h = Graph.from_edges(size, edges)
                cert = graph_certificate(h)
                if cert in seen:
                    continue
                seen.add(cert)
                if keep(h):
                    out.append(h)
        levels.append(out)
    return levels


def _iso(space: SearchSpace, stats: EnumStats) -> Iterator[Hypergraph]:
    if space.r == 2:
        if space.objective == "cycle":
            keep = lambda g: graph_circumference(g) < space.k  # noqa: E731
        elif space.objective == "path":
            keep = lambda g: longest_berge_path(g)[0] < space.k  # noqa: E731
        else:
            keep = lambda g: True  # noqa: E731
        for g in graph_levels(space.n, keep)[space.n]:
            stats.visited += 1
            if (not space.two_connected or is_2connected(g)) and (not space.connected or is_connected(g)):
                stats.emitted += 1
                yield g
        return
    # hypergraphs: labeled walk, one representative per certificate
    seen: set = set()
    inner = EnumStats()
    for h in _labeled(space, inner, (0, 1), False):
        cert = hypergraph_certificate(h)
        if cert in seen:
            continue
        seen.add(cert)
        stats.visited += 1
        stats.emitted += 1
        yield h


def enumerate_space(space: SearchSpace, visitor: Callable[[Hypergraph], None] | None = None,
                    stats: EnumStats | None = None, shard: tuple[int, int] = (0, 1),
                    count_skips: bool = False) -> Iterator[Hypergraph]:
    """Stream every family in ``space``; ``visitor`` is called on each before it is yielded.

    ``shard=(i, w)`` restricts the labeled walk to first edges with index
    congruent to ``i`` mod ``w``. Isomorph-rejected runs are not sharded.
    """
    space.check_cap()
    stats = EnumStats() if stats is None else stats
    if space.iso:
        if shard != (0, 1):
            raise ValueError("isomorph-rejected enumeration is not sharded")
        gen = _iso(space, stats)
    else:
        gen = _labeled(space, stats, shard, count_skips)
    for h in gen:
        if visitor is not None:
            visitor(h)
        yield h


def extremal_number(n: int, k: int, r: int, mode: str = "cycle", dedup: str = "auto") -> tuple[int, Hypergraph | None]:
    """Most edges of a Sperner family in the space, with the first maximiser met.

    ``cycle`` mode asks for 2-connected families without Berge cycles of
    length ``k`` or more; ``path`` mode for connected families without Berge
    paths of length ``k``.
    """
    if mode not in ("cycle", "path"):
        raise ValueError(f"unknown mode {mode!r}")
    space = SearchSpace(n, r, connected=mode == "path", two_connected=mode == "cycle",
                        objective=mode, k=k, dedup=dedup)
    best, arg = -1, None
    for h in enumerate_space(space):
        if h.m > best:
            best, arg = h.m, h
    return best, arg


# random generators


@dataclass
class SampleAudit:
    attempts: int = 0
    accepted: int = 0
    reasons: dict = field(default_factory=dict)

    def reject(self, why: str) -> None:
        self.reasons[why] = self.reasons.get(why, 0) + 1


def random_sperner(n: int, r: int, rng: random.Random, m: int | None = None) -> Hypergraph:
    """Sample an edge count, then edges of size 2..r that keep the family an antichain."""
    if n < 2:
        return Hypergraph(n, (), r)
    if m is None:
        m = rng.randint(1, 2 * n)
    masks: list[int] = []
    for _ in range(4 * m):
        if len(masks) >= m:
            break
        size = rng.randint(2, min(r, n))
        e = sum(1 << v for v in rng.sample(range(n), size))
        if _compatible(e, masks, True):
            masks.append(e)
    return Hypergraph.from_edges(n, [[v for v in range(n) if e >> v & 1] for e in masks], r)


def repair_2connected(h: Hypergraph, rng: random.Random, tries: int = 50) -> Hypergraph | None:
    """Add pair edges (ears) across cut nodes until the family is 2-connected; ``None`` if stuck."""
    from .connectivity import DISCONNECTED, components_without, cut_nodes
    from .hypergraph import incidence_bigraph

    for _ in range(tries):
        if is_2connected(h):
            return h
        cuts = cut_nodes(incidence_bigraph(h))
        if cuts == DISCONNECTED:
            parts = [sorted(vs) for vs, _ in components_without(h)]
        else:
            kind, node = sorted(cuts)[rng.randrange(len(cuts))]
            if kind == "vertex":
                parts = [sorted(vs) for vs, _ in components_without(h, vertices=[node])]
            else:
                parts = [sorted(vs) for vs, _ in components_without(h, edges=[node])]
        parts = [p for p in parts if p]
        if len(parts) < 2:
            return None
        p, q = rng.sample(parts, 2)
        masks = list(h.masks)
        options = [(u, v) for u in p for v in q if _compatible(1 << u | 1 << v, masks, True)]
        if not options:
            return None
        u, v = rng.choice(options)
        h = Hypergraph.from_edges(h.n, list(h.edges) + [(u, v)], h.r)
    return h if is_2connected(h) else None


def random_unhappy_instance(n: int, rng: random.Random, r: int = 3, audit: SampleAudit | None = None,
                            max_attempts: int = 10000) -> Hypergraph:
    """Unhappy 2-connected Sperner family with circumference below ``n``, by rejection."""
    audit = SampleAudit() if audit is None else audit
    for _ in range(max_attempts):
        audit.attempts += 1
        h = random_sperner(n, r, rng, rng.randint(2, n + 2))
        h = repair_2connected(h, rng)
        if h is None:
            audit.reject("repair failed")
            continue
        if not is_sperner(h) or not is_2connected(h):
            audit.reject("filter")
            continue
        if not unhappy_edges(h):
            audit.reject("happy")
            continue
        if circumference(h, cutoff=n)[0] >= n:
            audit.reject("long cycle")
            continue
        audit.accepted += 1
        return h
    raise RuntimeError(f"no instance accepted after {max_attempts} attempts")


def random_happy_sperner(n: int, r: int, rng: random.Random, audit: SampleAudit | None = None,
                         max_attempts: int = 10000) -> Hypergraph:
    """Happy Sperner family glued from complete ``s``-uniform families on ``s+1`` vertices and pairs."""
    audit = SampleAudit() if audit is None else audit
    for _ in range(max_attempts):
        audit.attempts += 1
        masks: list[int] = []
        for _ in range(rng.randint(1, n)):
            s = rng.randint(2, min(r, n - 1))
            if s == 2 and rng.random() < 0.5:
                gadget = [rng.sample(range(n), 2)]
            else:
                gadget = list(combinations(rng.sample(range(n), s + 1), s))
            for e in gadget:
                m = sum(1 << v for v in e)
                if m not in masks and _compatible(m, masks, True):
                    masks.append(m)
        h = Hypergraph.from_edges(n, [[v for v in range(n) if e >> v & 1] for e in masks], r)
        if not h.m or not is_sperner(h):
            audit.reject("filter")
            continue
        if not is_happy(h):
            audit.reject("unhappy")
            continue
        audit.accepted += 1
        return h
    raise RuntimeError(f"no instance accepted after {max_attempts} attempts")
