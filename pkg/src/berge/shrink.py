"""Shrinking an unhappy Sperner 2-connected hypergraph towards a happy one.

Five local rewrites are available:

* ``T1``  drop one vertex from an unhappy edge;
* ``T2``  delete a special degree-2 vertex;
* ``T3``  delete both ends of a special graph edge;
* ``T4``  glue all but one vertex of an unhappy edge into a new vertex;
* ``T5``  replace a special 2-block by the pair of its outer vertices.

The rewrites themselves make no promises. :func:`shrink_step` tries them in
the fixed order above, candidate by candidate, and keeps the first result
that passes :func:`validate_step`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

from .bounds import block_density_cap
from .connectivity import is_2connected, separated_pieces, special_2blocks
from .hypergraph import Hypergraph, codegree, incidence_bigraph, is_happy_edge, is_sperner, unhappy_edges, validate
from .search import circumference, longest_berge_xy_path

KINDS = ("T1", "T2", "T3", "T4", "T5")


class PreconditionError(ValueError):
    pass


def _rebuild(h: Hypergraph, edges: Iterable[Iterable[int]], removed: Iterable[int] = ()) -> Hypergraph:
    """Relaxed rebuild: drop ``removed`` vertices, compact labels, keep duplicates."""
    removed = set(removed)
    keep = [v for v in range(h.n) if v not in removed]
    pos = {v: i for i, v in enumerate(keep)}
    return Hypergraph.from_edges(len(keep), [[pos[v] for v in e] for e in edges], h.r)


def find_menace(h: Hypergraph, e: int, v: int) -> int | None:
    """An edge other than ``e`` containing ``e - v``, if any."""
    if v not in h.edges[e]:
        raise PreconditionError(f"vertex {v} is not in edge {e}")
    rest = h.masks[e] & ~(1 << v)
    return next((i for i, m in enumerate(h.masks) if i != e and m & rest == rest), None)


def special_vertices(h: Hypergraph) -> list[int]:
    """Degree-2 vertices whose two edges are each unhappy or of size 2."""
    out = []
    for v in range(h.n):
        inc = h.incidence[v]
        if len(inc) == 2 and all(len(h.edges[i]) == 2 or not is_happy_edge(h, i) for i in inc):
            out.append(v)
    return out


def _other_edge(h: Hypergraph, v: int, e: int) -> int:
    a, b = h.incidence[v]
    return b if a == e else a


def special_edges(h: Hypergraph) -> list[int]:
    """Size-2 edges with special ends whose other edges are unhappy."""
    spec = set(special_vertices(h))
    out = []
    for i, e in enumerate(h.edges):
        if len(e) != 2 or not (e[0] in spec and e[1] in spec):
            continue
        if all(not is_happy_edge(h, _other_edge(h, v, i)) for v in e):
            out.append(i)
    return out


def special_triples(h: Hypergraph) -> list[tuple[int, int, int]]:
    """The same objects read off the incidence bigraph: ``(x, a, y)`` with ``N(a) = {x, y}``."""
    b = incidence_bigraph(h)
    happy = [len(ys) < 3 or all(codegree(h, p, q) >= len(ys) - 1 for p, q in combinations(ys, 2)) for ys in b.a_nodes]

    def special_y(y: int) -> bool:
        return len(b.y_nodes[y]) == 2 and all(not happy[a] or len(b.a_nodes[a]) == 2 for a in b.y_nodes[y])

    out = []
    for a, ys in enumerate(b.a_nodes):
        if len(ys) != 2 or not all(special_y(y) for y in ys):
            continue
        others = [next(o for o in b.y_nodes[y] if o != a) for y in ys]
        if all(not happy[o] for o in others):
            out.append((ys[0], a, ys[1]))
    return out


def apply_T1(h: Hypergraph, e: int, v: int) -> Hypergraph:
    if is_happy_edge(h, e):
        raise PreconditionError(f"T1: edge {e} is happy")
    if v not in h.edges[e]:
        raise PreconditionError(f"T1: vertex {v} is not in edge {e}")
    edges = [tuple(x for x in f if x != v) if i == e else f for i, f in enumerate(h.edges)]
    return _rebuild(h, edges)


def apply_T2(h: Hypergraph, v: int, e1: int, e2: int) -> Hypergraph:
    if v not in special_vertices(h):
        raise PreconditionError(f"T2: vertex {v} is not special")
    if set(h.incidence[v]) != {e1, e2}:
        raise PreconditionError(f"T2: edges {e1}, {e2} are not the two edges at {v}")
    edges = []
    for i, f in enumerate(h.edges):
        if i in (e1, e2):
            if len(f) > 2:
                edges.append(tuple(x for x in f if x != v))
        else:
            edges.append(f)
    return _rebuild(h, edges, [v])


def apply_T3(h: Hypergraph, uv: int) -> Hypergraph:
    if uv not in special_edges(h):
        raise PreconditionError(f"T3: edge {uv} is not special")
    u, v = h.edges[uv]
    edges = [tuple(x for x in f if x not in (u, v)) for i, f in enumerate(h.edges) if i != uv]
    return _rebuild(h, edges, [u, v])


def apply_T4(h: Hypergraph, e: int, keep: int) -> Hypergraph:
    """Glue ``e - keep`` into one vertex placed at the smallest glued label."""
    if is_happy_edge(h, e):
        raise PreconditionError(f"T4: edge {e} is happy")
    if keep not in h.edges[e]:
        raise PreconditionError(f"T4: vertex {keep} is not in edge {e}")
    glue = [x for x in h.edges[e] if x != keep]
    star = glue[0]
    gset = set(glue)
    edges = []
    for f in h.edges:
        edges.append(tuple(sorted({star if x in gset else x for x in f})))
    return _rebuild(h, edges, glue[1:])


def apply_T5(h: Hypergraph, block: Iterable[int], x: int, y: int) -> Hypergraph:
    """Delete the interior of a special 2-block with outer vertices ``x``, ``y`` and add ``{x, y}``."""
    block = frozenset(block)
    match = [tb for tb in special_2blocks(h) if tb.vertices == block and tb.outer == (x, y)]
    if not match:
        raise PreconditionError(f"T5: {sorted(block)} with outer ({x}, {y}) is not a special 2-block")
    interior = block - {x, y}
    edges = [f for f in h.edges if not interior.intersection(f)]
    if (min(x, y), max(x, y)) not in {tuple(f) for f in edges}:
        edges.append((x, y))
    return _rebuild(h, edges, interior)


@dataclass
class StepCheck:
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


def accounting_problems(before: tuple, after: tuple, kind: str, k: int, r: int) -> list[str]:
    """Cardinality bookkeeping between ``(|V|, |E|, sum |e|)`` metric tuples."""
    (n0, m0, s0), (n1, m1, s1) = before, after
    out = []
    if s1 > s0:
        out.append(f"sum of edge sizes grew {s0} -> {s1}")
    if n1 > n0:
        out.append(f"vertex count grew {n0} -> {n1}")
    if not s1 + n1 < s0 + n0:
        out.append(f"sum of sizes plus vertices did not drop ({s0 + n0} -> {s1 + n1})")
    if kind == "T5":
        t = (k - 1) // 2
        cap = block_density_cap(t, r, n0 - n1)
        if m0 - m1 > cap:
            out.append(f"lost {m0 - m1} edges, more than {cap}")
    elif m0 - m1 > n0 - n1:
        out.append(f"lost {m0 - m1} edges but only {n0 - n1} vertices")
    return out


def validate_step(h: Hypergraph, h2: Hypergraph, k: int, kind: str = "T1") -> StepCheck:
    """Check a candidate rewrite: well formed, Sperner, 2-connected, bookkeeping, no cycle of length ``k``."""
    chk = StepCheck()
    rep = validate(h2)
    if not rep.valid:
        chk.problems.extend(f"malformed: {p}" for p in rep.problems)
        return chk
    if not is_sperner(h2):
        chk.problems.append("not Sperner")
    if not is_2connected(h2):
        chk.problems.append("not 2-connected")
    chk.problems.extend(accounting_problems(h.metrics(), h2.metrics(), kind, k, h.r))
    if chk.ok:
        c, _ = circumference(h2, cutoff=k)
        if c >= k:
            chk.problems.append(f"has a Berge cycle of length {c} >= {k}")
    return chk


@dataclass
class ShrinkStep:
    kind: str
    params: dict
    before: tuple[int, int, int]
    after: tuple[int, int, int]
    thick_pairs_matching: bool = True
    all_pairs_thin: bool = True

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": self.params, "before": list(self.before), "after": list(self.after)}


@dataclass
class BlockPiece:
    x: int
    y: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    longest_xy_path: int = 0


@dataclass
class BlockReport:
    """Three pieces hanging off an unhappy edge ``a`` through separating pairs ``{a, x_i}``."""

    edge: int
    pieces: list[BlockPiece]
    problems: list[str] = field(default_factory=list)

    def long_pieces(self, k: int) -> int:
        # a Berge x,y-path of length l is an incidence-bigraph path with 2l edges
        return sum(1 for p in self.pieces if 2 * p.longest_xy_path >= k)

    def to_dict(self) -> dict:
        return {
            "edge": self.edge,
            "pieces": [{"x": p.x, "y": p.y, "vertices": list(p.vertices), "edges": list(p.edges)} for p in self.pieces],
        }


@dataclass
class StuckFinding:
    """Unhappy, no rewrite validates, and no block report was found."""

    hypergraph: Hypergraph
    k: int
    rejected: dict[str, int]


def _candidates(h: Hypergraph):
    """Every rewrite in acceptance order, as ``(kind, params, builder)``."""
    bad = unhappy_edges(h)
    for e in bad:
        for v in h.edges[e]:
            yield "T1", {"edge": list(h.edges[e]), "vertex": v}, lambda e=e, v=v: apply_T1(h, e, v)
    for v in special_vertices(h):
        e1, e2 = h.incidence[v]
        yield "T2", {"vertex": v, "edges": [list(h.edges[e1]), list(h.edges[e2])]}, lambda v=v, e1=e1, e2=e2: apply_T2(h, v, e1, e2)
    for uv in special_edges(h):
        yield "T3", {"edge": list(h.edges[uv])}, lambda uv=uv: apply_T3(h, uv)
    for e in bad:
        # glue sets in ascending lexicographic order, i.e. the kept vertex descending
        for keep in sorted(h.edges[e], reverse=True):
            glue = [x for x in h.edges[e] if x != keep]
            yield "T4", {"edge": list(h.edges[e]), "keep": keep, "glue": glue}, lambda e=e, keep=keep: apply_T4(h, e, keep)
    for tb in special_2blocks(h):
        x, y = tb.outer
        yield "T5", {"block": sorted(tb.vertices), "x": x, "y": y}, lambda tb=tb, x=x, y=y: apply_T5(h, tb.vertices, x, y)


def apply_step(h: Hypergraph, kind: str, params: dict) -> Hypergraph:
    """Re-apply a recorded step from its parameters (edges named by their vertex lists)."""
    index = {tuple(e): i for i, e in enumerate(h.edges)}
    if kind == "T1":
        return apply_T1(h, index[tuple(params["edge"])], params["vertex"])
    if kind == "T2":
        e1, e2 = (index[tuple(e)] for e in params["edges"])
        return apply_T2(h, params["vertex"], e1, e2)
    if kind == "T3":
        return apply_T3(h, index[tuple(params["edge"])])
    if kind == "T4":
        return apply_T4(h, index[tuple(params["edge"])], params["keep"])
    if kind == "T5":
        return apply_T5(h, params["block"], params["x"], params["y"])
    raise ValueError(f"unknown step kind {kind!r}")


def thick_pairs_form_matching(h: Hypergraph) -> bool:
    for e in unhappy_edges(h):
        seen = set()
        for p, q in combinations(h.edges[e], 2):
            if codegree(h, p, q) >= 2:
                if p in seen or q in seen:
                    return False
                seen.update((p, q))
    return True


def unhappy_pairs_all_thin(h: Hypergraph) -> bool:
    return all(codegree(h, p, q) == 1 for e in unhappy_edges(h) for p, q in combinations(h.edges[e], 2))


def check_preconditions(h: Hypergraph, k: int) -> None:
    if not validate(h).valid:
        raise PreconditionError("input is malformed: " + "; ".join(validate(h).problems))
    if not is_sperner(h):
        raise PreconditionError("input is not Sperner")
    if not is_2connected(h):
        raise PreconditionError("input is not 2-connected")
    c, _ = circumference(h, cutoff=k)
    if c >= k:
        raise PreconditionError(f"input has a Berge cycle of length {c} >= {k}")


def find_block_report(h: Hypergraph, k: int, edge: int | None = None) -> BlockReport | None:
    """Search the separating pairs ``{a, x}`` of each unhappy edge ``a`` for three compatible pieces."""
    targets = unhappy_edges(h) if edge is None else [edge]
    for a in targets:
        pieces = []
        for x, _, y, piece, es in separated_pieces(h, a):
            if h.masks[a] >> x & 1:
                continue
            sub = h.edge_subset(es)
            if not is_sperner(sub):
                continue
            rest_edges = [i for i in range(h.m) if i not in es and i != a]
            removed = piece - {x}
            rest = _rebuild(h, [h.edges[i] for i in rest_edges], removed)
            if not (is_sperner(rest) and is_2connected(rest)):
                continue
            pieces.append((x, y, piece, es))
        for trio in combinations(pieces, 3):
            if len({p[1] for p in trio}) < 3:
                continue
            if all(_compatible(p, q) for p, q in combinations(trio, 2)):
                out = []
                for x, y, piece, es in trio:
                    sub_vertices = sorted(piece)
                    pos = {v: i for i, v in enumerate(sub_vertices)}
                    sub = h.edge_subset(es)
                    out.append(BlockPiece(x, y, tuple(sub_vertices), es, longest_berge_xy_path(sub, pos[x], pos[y])))
                rep = BlockReport(a, out)
                if rep.long_pieces(k) > 1:
                    rep.problems.append("more than one piece has a long x,y-path")
                return rep
    return None


def _compatible(p, q) -> bool:
    """Two pieces share at most one node of the incidence bigraph, and do so exactly when their ``x`` agree."""
    xp, _, vp, ep = p
    xq, _, vq, eq = q
    shared = len(vp & vq) + len(set(ep) & set(eq))
    return shared <= 1 and (shared == 1) == (xp == xq)


def shrink_step(h: Hypergraph, k: int, check: bool = True, log: list | None = None):
    """One application of the first validating rewrite.

    Returns ``(h2, step)``, a :class:`BlockReport`, a :class:`StuckFinding`, or
    the string ``"already-happy"``. ``log`` collects every tried candidate as
    ``(kind, params, problems)``.
    """
    if check:
        check_preconditions(h, k)
    if not unhappy_edges(h):
        return "already-happy"
    matching = thick_pairs_form_matching(h)
    thin = unhappy_pairs_all_thin(h)
    rejected = {kind: 0 for kind in KINDS}
    for kind, params, build in _candidates(h):
        h2 = build()
        chk = validate_step(h, h2, k, kind)
        if log is not None:
            log.append((kind, params, list(chk.problems)))
        if chk.ok:
            return h2, ShrinkStep(kind, params, h.metrics(), h2.metrics(), matching, thin)
        rejected[kind] += 1
    report = find_block_report(h, k)
    if report is not None:
        return report
    return StuckFinding(h, k, rejected)


@dataclass
class ShrinkTrace:
    initial: Hypergraph
    k: int
    steps: list[ShrinkStep] = field(default_factory=list)
    states: list[Hypergraph] = field(default_factory=list)
    final: Hypergraph | None = None
    terminal: str = "happy"
    block_report: BlockReport | None = None
    finding: StuckFinding | None = None
    problems: list[str] = field(default_factory=list)

    def replay(self) -> Hypergraph:
        h = self.initial
        for st in self.steps:
            h = apply_step(h, st.kind, st.params)
        return h

    def ordering_ok(self) -> bool:
        """No ``T1`` step directly after a ``T2``, ``T3`` or ``T4`` step."""
        kinds = [s.kind for s in self.steps]
        return not any(a in ("T2", "T3", "T4") and b == "T1" for a, b in zip(kinds, kinds[1:]))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "initial": self.initial.to_dict(),
            "steps": [s.to_dict() for s in self.steps],
            "final": self.final.to_dict() if self.final is not None else None,
            "terminal": self.terminal,
            "block_report": self.block_report.to_dict() if self.block_report else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True) + "\n"


def cumulative_problems(trace: ShrinkTrace) -> list[str]:
    """Summed bookkeeping from the first to the last state."""
    out = []
    if not trace.steps:
        return out
    n0, m0, s0 = trace.initial.metrics()
    n1, m1, s1 = trace.final.metrics()
    if not (s1 <= s0 and n1 <= n0):
        out.append("sizes or vertex count grew over the run")
    if trace.steps and not s1 + n1 <= s0 + n0 - len(trace.steps):
        out.append("sum of sizes plus vertices did not drop once per step")
    t = (trace.k - 1) // 2
    allowance = 0
    for st in trace.steps:
        lost_v = st.before[0] - st.after[0]
        allowance += block_density_cap(t, trace.initial.r, lost_v) if st.kind == "T5" else lost_v
    if m0 - m1 > allowance:
        out.append(f"lost {m0 - m1} edges, allowance {allowance}")
    return out


def reduce_to_happy(h: Hypergraph, k: int, max_steps: int | None = None) -> ShrinkTrace:
    """Iterate :func:`shrink_step` until the hypergraph is happy or no rewrite applies."""
    check_preconditions(h, k)
    trace = ShrinkTrace(h, k, states=[h])
    limit = h.size_sum + h.n if max_steps is None else max_steps
    cur = h
    while True:
        if len(trace.steps) > limit:
            trace.problems.append("step limit exceeded")
            trace.terminal = "stuck"
            break
        res = shrink_step(cur, k, check=False)
        if res == "already-happy":
            trace.terminal = "happy"
            break
        if isinstance(res, BlockReport):
            trace.terminal = "stuck-with-blocks"
            trace.block_report = res
            trace.problems.extend(res.problems)
            break
        if isinstance(res, StuckFinding):
            trace.terminal = "stuck"
            trace.finding = res
            trace.problems.append("no rewrite validates and no block report was found")
            break
        cur, step = res
        if step.kind != "T1" and not step.thick_pairs_matching:
            trace.problems.append(f"step {len(trace.steps)}: thick pairs of an unhappy edge do not form a matching")
        if step.kind not in ("T1", "T2") and not step.all_pairs_thin:
            trace.problems.append(f"step {len(trace.steps)}: an unhappy edge has a thick pair")
        trace.steps.append(step)
        trace.states.append(cur)
    trace.final = cur
    if not trace.ordering_ok():
        trace.problems.append("a T1 step follows a T2, T3 or T4 step")
    trace.problems.extend(cumulative_problems(trace))
    if trace.terminal == "happy" and trace.final.n == k - 1 and trace.steps and all(s.kind != "T5" for s in trace.steps):
        cap = comb(k - 2, min(h.r, (k - 2) // 2)) + 2
        if trace.final.m > cap:
            trace.problems.append(f"final edge count {trace.final.m} exceeds {cap}")
    return trace

