"""Theorem-by-theorem verification over enumerated or sampled small instances.

Each checker returns a :class:`VerificationReport` with one
:class:`PointResult` per grid point. A failing point carries a witness
hypergraph that has been re-checked with the slow oracles below, so a
reported failure is a property of the instance and not of the fast search.
"""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .bounds import f, hsp, kpath_density_bound, main_cycle_bound, main_path_bound
from .cliques import max_sperner_cliques, nsp_bound_check
from .connectivity import DISCONNECTED, components_without, cut_nodes, is_2connected, is_connected
from .cores import kopylov_case
from .enumeration import (
    SampleAudit, SearchSpace, enumerate_space, graph_levels, random_happy_sperner, random_unhappy_instance,
)
from .hypergraph import Graph, Hypergraph, incidence_bigraph, is_sperner, shadow
from .matching import max_matching
from .search import (
    LiftError, check_witness, circumference, graph_circumference, is_l_hamiltonian, lift_shadow_cycle,
    longest_berge_path, shadow_cycles,
)
from .shrink import apply_step, reduce_to_happy, validate_step

THEOREMS = ("main2conn", "main_paths", "nsp", "kopylov", "pps", "kpath", "lifting", "shrink", "component", "cutedge")
CSV_COLUMNS = ("theorem", "n", "k", "r", "extremal", "bound", "status")


@dataclass
class PointResult:
    n: int
    k: int | None
    r: int | None
    status: str  # "holds", "out-of-domain" or "FAILURE"
    extremal: int | None = None
    bound: object = None
    checked: int = 0
    sharp: bool = False
    witness: dict | None = None
    notes: list[str] = field(default_factory=list)


@dataclass
class VerificationReport:
    theorem: str
    grid: dict
    points: list[PointResult] = field(default_factory=list)

    @property
    def failures(self) -> list[PointResult]:
        return [p for p in self.points if p.status == "FAILURE"]

    @property
    def holds(self) -> bool:
        return not self.failures

    @property
    def sharpness_hits(self) -> list[PointResult]:
        return [p for p in self.points if p.sharp]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for p in self.points:
            w.writerow([self.theorem, p.n, "" if p.k is None else p.k, "" if p.r is None else p.r,
                        "" if p.extremal is None else p.extremal, "" if p.bound is None else p.bound, p.status])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "grid": self.grid,
            "points": [
                {"n": p.n, "k": p.k, "r": p.r, "status": p.status, "extremal": p.extremal,
                 "bound": None if p.bound is None else str(p.bound), "checked": p.checked,
                 "sharp": p.sharp, "witness": p.witness, "notes": p.notes}
                for p in self.points
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True) + "\n"


# slow oracles: plain permutations and one bipartite matching per sequence


def _pairs_have_sdr(h: Hypergraph, pairs: list[tuple[int, int]]) -> bool:
    adj = [[i for i, m in enumerate(h.masks) if m >> u & 1 and m >> v & 1] for u, v in pairs]
    return len(max_matching(adj)) == len(pairs)


def slow_circumference(h: Hypergraph) -> int:
    best = 0
    for length in range(2, h.n + 1):
        for base in combinations(range(h.n), length):
            first, rest = base[0], base[1:]
            if any(_pairs_have_sdr(h, list(zip((first,) + p, p + (first,)))) for p in permutations(rest)):
                best = length
                break
    return best


def slow_longest_path(h: Hypergraph) -> int:
    best = 0
    for length in range(1, h.n):
        found = any(
            _pairs_have_sdr(h, list(zip(p, p[1:])))
            for base in combinations(range(h.n), length + 1)
            for p in permutations(base)
        )
        if not found:
            break
        best = length
    return best


def _failure(p: PointResult, h: Hypergraph, note: str) -> PointResult:
    p.status = "FAILURE"
    p.witness = h.to_dict()
    p.notes.append(note)
    return p


# extremal sweeps, sharded by first edge


def _extremal_shard(args) -> tuple[int, list | None, int]:
    n, k, r, mode, shard = args
    space = SearchSpace(n, r, connected=mode == "path", two_connected=mode == "cycle",
                        objective=mode, k=k, dedup="labeled")
    best, arg, count = -1, None, 0
    for h in enumerate_space(space, shard=shard):
        count += 1
        if h.m > best:
            best, arg = h.m, [list(e) for e in h.edges]
    return best, arg, count


def extremal_sharded(n: int, k: int, r: int, mode: str, workers: int = 1) -> tuple[int, Hypergraph | None, int]:
    """Like :func:`extremal_number`, with the labeled walk split over ``workers`` processes."""
    jobs = [(n, k, r, mode, (i, workers)) for i in range(workers)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_extremal_shard, jobs))
    else:
        parts = [_extremal_shard(jobs[0])]
    best, arg, count = -1, None, 0
    for b, a, c in parts:  # shard order keeps the merge deterministic
        count += c
        if b > best:
            best, arg = b, a
    return best, (None if arg is None else Hypergraph.from_edges(n, arg, r)), count


def _main_bound(theorem: str, grid: dict, workers: int) -> VerificationReport:
    mode = "cycle" if theorem == "main2conn" else "path"
    bound_fn = main_cycle_bound if mode == "cycle" else main_path_bound
    rep = VerificationReport(theorem, grid)
    for r in grid["r"]:
        for k in grid["k"]:
            for n in range(grid.get("nmin", 1), grid["nmax"] + 1):
                p = PointResult(n, k, r, "holds")
                rep.points.append(p)
                if not n >= k >= r >= 3:
                    p.status = "out-of-domain"
                    continue
                p.bound = bound_fn(n, k, r)
                best, arg, p.checked = extremal_sharded(n, k, r, mode, workers)
                if arg is None:
                    p.notes.append("no family in the space")
                    continue
                p.extremal = best
                p.sharp = best == p.bound
                if best > p.bound:
                    ok = is_sperner(arg) and (is_2connected(arg) if mode == "cycle" else is_connected(arg))
                    long = slow_circumference(arg) if mode == "cycle" else slow_longest_path(arg)
                    if ok and long < k:
                        _failure(p, arg, f"{best} edges exceed {p.bound}")
                    else:
                        p.status = "holds"
                        p.notes.append("over-bound witness failed re-validation: search bug")
    return rep


def _two_connected_graphs(nmax: int, cmax: int | None = None) -> dict[int, list[Graph]]:
    keep = (lambda g: True) if cmax is None else (lambda g: graph_circumference(g) < cmax)
    levels = graph_levels(nmax, keep)
    return {n: [g for g in levels[n] if is_2connected(g)] for n in range(nmax + 1)}


def _nsp(theorem: str, grid: dict) -> VerificationReport:
    rep = VerificationReport(theorem, grid)
    graphs = _two_connected_graphs(grid["nmax"])
    cache: dict = {}
    for r in grid["r"]:
        for k in grid["k"]:
            for n in range(grid.get("nmin", 1), grid["nmax"] + 1):
                p = PointResult(n, k, r, "out-of-domain")
                rep.points.append(p)
                for g in graphs[n]:
                    key = (g.edges, n, k, r)
                    if key not in cache:
                        cache[key] = nsp_bound_check(g, k, r)
                    nr = cache[key]
                    if theorem == "nsp":
                        if nr.cycle_bound is None:
                            continue
                        p.checked += 1
                        p.bound = nr.cycle_bound
                        p.extremal = max(p.extremal or 0, nr.nsp)
                        if not nr.cycle_bound_holds:
                            _failure(p, g, f"N_Sp={nr.nsp} exceeds {nr.cycle_bound}")
                    else:
                        if nr.path_density_bound is None:
                            continue
                        p.checked += 1
                        p.bound = nr.path_density_bound
                        if not nr.path_bound_exceeded:
                            continue
                        p.extremal = max(p.extremal or 0, nr.nsp)
                        if nr.k_path_connected is False:
                            _failure(p, g, "density threshold exceeded without k-path connectivity")
                if p.checked and p.status != "FAILURE":
                    p.status = "holds"
                p.sharp = p.extremal is not None and p.extremal == p.bound
    return rep


def _kopylov(grid: dict) -> VerificationReport:
    rep = VerificationReport("kopylov", grid)
    graphs = _two_connected_graphs(grid["nmax"], max(grid["k"]))
    for k in grid["k"]:
        t = (k - 1) // 2
        for n in range(grid.get("nmin", 1), grid["nmax"] + 1):
            p = PointResult(n, k, 2, "out-of-domain")
            rep.points.append(p)
            if not n >= k >= 5:
                continue
            p.status = "holds"
            p.bound = max(f(n, k, 2, t), f(n, k, 2, 2))
            for g in graphs[n]:
                c = graph_circumference(g)
                if c >= k:
                    continue
                p.checked += 1
                p.extremal = max(p.extremal or 0, g.m)
                kr = kopylov_case(g, k, c)
                if not kr.holds:
                    _failure(p, g, "; ".join(kr.notes))
                elif g.m > p.bound:
                    _failure(p, g, f"{g.m} edges exceed {p.bound}")
            p.sharp = p.extremal == p.bound
    return rep


def _pps(grid: dict) -> VerificationReport:
    """``k`` in the grid plays the role of ``l``; every admissible ``d`` is tried per graph."""
    rep = VerificationReport("pps", grid)
    levels = graph_levels(grid["nmax"])
    for r in grid["r"]:
        for l in grid["k"]:
            for n in range(grid.get("nmin", 1), grid["nmax"] + 1):
                p = PointResult(n, l, r, "out-of-domain")
                rep.points.append(p)
                top = (n + l - 1) // 2
                if l < 0 or top <= l:
                    continue
                p.status = "holds"
                for g in levels[n]:
                    delta = min((bin(a).count("1") for a in g.adj), default=0)
                    ds = range(l + 1, min(delta, top) + 1)
                    if not ds or is_l_hamiltonian(g, l):
                        continue
                    nsp, _ = max_sperner_cliques(g, r)
                    p.checked += 1
                    p.extremal = max(p.extremal or 0, nsp)
                    for d in ds:
                        b = max(hsp(n, l, r, d), hsp(n, l, r, top))
                        p.bound = b if p.bound is None else max(p.bound, b)
                        if nsp > b:
                            _failure(p, g, f"N_Sp={nsp} exceeds {b} at d={d}")
                            break
    return rep


def _lifting(grid: dict) -> VerificationReport:
    rep = VerificationReport("lifting", grid)
    rng = random.Random(grid.get("seed", 0))
    audit = SampleAudit()
    per_cycle_limit = grid.get("cycle_limit", 200)
    points: dict = {}
    for _ in range(grid["samples"]):
        r = rng.choice(grid["r"])
        n = rng.randint(max(grid.get("nmin", 4), r + 1), grid["nmax"])
        h = random_happy_sperner(n, r, rng, audit)
        key = (n, r)
        p = points.get(key)
        if p is None:
            p = points[key] = PointResult(n, None, r, "holds")
        lifted = 0
        for cyc in shadow_cycles(shadow(h, 2), max(r, 3), per_cycle_limit):
            try:
                w = lift_shadow_cycle(h, cyc)
            except LiftError as exc:
                _failure(p, h, f"cycle {list(cyc)} does not lift: {exc}")
                continue
            problems = check_witness(h, w)
            if problems or w.base_vertices != tuple(cyc):
                _failure(p, h, f"cycle {list(cyc)} lifts to a bad witness: {problems}")
            lifted += 1
        p.checked += 1
        p.extremal = (p.extremal or 0) + lifted  # cycles lifted at this point
    rep.points = [points[key] for key in sorted(points)]
    rep.grid = dict(grid, attempts=audit.attempts)
    return rep


def _shrink(grid: dict) -> VerificationReport:
    rep = VerificationReport("shrink", grid)
    rng = random.Random(grid.get("seed", 0))
    audit = SampleAudit()
    points: dict = {}
    for _ in range(grid["samples"]):
        n = rng.randint(grid.get("nmin", 5), grid["nmax"])
        r = rng.choice(grid["r"])
        h = random_unhappy_instance(n, rng, r, audit)
        p = points.get(n)
        if p is None:
            p = points[n] = PointResult(n, n, r, "holds")
        p.checked += 1
        trace = reduce_to_happy(h, n)
        p.extremal = max(p.extremal or 0, len(trace.steps))
        if trace.terminal != "happy" or trace.problems:
            _failure(p, h, f"{trace.terminal}: {trace.problems}")
            continue
        cur = h
        for st in trace.steps:
            nxt = apply_step(cur, st.kind, st.params)
            chk = validate_step(cur, nxt, n, st.kind)
            if not chk.ok:
                _failure(p, h, f"replayed {st.kind} step fails: {chk.problems}")
                break
            cur = nxt
        if cur != trace.final:
            _failure(p, h, "replay does not reach the final state")
    rep.points = [points[n] for n in sorted(points)]
    rep.grid = dict(grid, attempts=audit.attempts)
    return rep


def _cut_edges(h: Hypergraph) -> list[int]:
    cuts = cut_nodes(incidence_bigraph(h))
    if cuts == DISCONNECTED:
        return []
    return sorted(i for kind, i in cuts if kind == "edge")


def _shrink_edge(h: Hypergraph, e: int, keep: set) -> Hypergraph:
    edges = [tuple(v for v in x if v in keep) if i == e else x for i, x in enumerate(h.edges)]
    return Hypergraph.from_edges(h.n, edges, h.r)


def _contract(h: Hypergraph, u: int, v: int) -> Hypergraph:
    """Merge ``v`` into ``u``, relabel onto ``0..n-2``, drop edges that become singletons."""
    relabel = {w: (w if w < v else w - 1) for w in range(h.n) if w != v}
    relabel[v] = relabel[u]
    edges = {tuple(sorted({relabel[w] for w in x})) for x in h.edges}
    return Hypergraph.from_edges(h.n - 1, [x for x in edges if len(x) >= 2], h.r)


def _connected_no_path(grid: dict):
    for r in grid["r"]:
        for k in grid["k"]:
            for n in range(grid.get("nmin", 1), grid["nmax"] + 1):
                space = SearchSpace(n, r, connected=True, objective="path", k=k, dedup="labeled")
                yield n, k, r, enumerate_space(space)


def _component(grid: dict) -> VerificationReport:
    rep = VerificationReport("component", grid)
    for n, k, r, stream in _connected_no_path(grid):
        p = PointResult(n, k, r, "holds")
        rep.points.append(p)
        for h in stream:
            p.checked += 1
            c, _ = circumference(h)
            if c > k or (c == k and n != k):
                _failure(p, h, f"cycle of length {c} on {n} vertices without a path of length {k}")
            if c == k:
                p.extremal = (p.extremal or 0) + 1
    return rep


def _cutedge(grid: dict) -> VerificationReport:
    """Shrinking a cut edge to one vertex per component, and contracting it, keep the family valid."""
    rep = VerificationReport("cutedge", grid)
    for n, k, r, stream in _connected_no_path(grid):
        p = PointResult(n, k, r, "holds")
        rep.points.append(p)
        for h in stream:
            if not is_sperner(h):
                continue
            base = longest_berge_path(h)[0]
            for e in _cut_edges(h):
                p.checked += 1
                comps = [vs for vs, _ in components_without(h, edges=[e])]
                meets = [sorted(vs & set(h.edges[e])) for vs in comps]
                if all(len(m) <= 1 for m in meets):
                    u, v = [m[0] for m in meets if m][:2]
                    h2 = _contract(h, u, v)
                    if not (is_sperner(h2) and is_connected(h2) and longest_berge_path(h2)[0] < k):
                        _failure(p, h, f"contracting cut edge {list(h.edges[e])} breaks the family")
                    continue
                for m in meets:
                    if len(m) < 2:
                        continue
                    keep = set(h.edges[e]) - set(m[1:])
                    h2 = _shrink_edge(h, e, keep)
                    if not (is_sperner(h2) and is_connected(h2)) or longest_berge_path(h2)[0] > base:
                        _failure(p, h, f"shrinking cut edge {list(h.edges[e])} breaks the family")
    return rep


def verify(theorem: str, grid: dict, workers: int = 1) -> VerificationReport:
    """Run one checker. ``grid`` holds ``nmax`` (and optionally ``nmin``), lists ``k`` and ``r``,
    and for the sampled checkers ``samples`` and ``seed``."""
    if theorem in ("main2conn", "main_paths"):
        return _main_bound(theorem, grid, workers)
    if theorem in ("nsp", "kpath"):
        return _nsp(theorem, grid)
    if theorem == "kopylov":
        return _kopylov(grid)
    if theorem == "pps":
        return _pps(grid)
    if theorem == "lifting":
        return _lifting(grid)
    if theorem == "shrink":
        return _shrink(grid)
    if theorem == "component":
        return _component(grid)
    if theorem == "cutedge":
        return _cutedge(grid)
    raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
