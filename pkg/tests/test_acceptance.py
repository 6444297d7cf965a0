"""Acceptance criteria, one test each, each printing a single PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v -s`` or
``python -m tests.test_acceptance``.
"""

import time
from itertools import combinations

import pytest

from berge.bounds import convexity_check, f, fstar, hsp, n_threshold
from berge.cliques import enumerate_cliques, max_sperner_cliques
from berge.connectivity import is_2connected
from berge.constructions import build_HCal, build_Hnka
from berge.enumeration import graph_levels
from berge.hypergraph import Hypergraph, is_sperner, validate
from berge.search import circumference, graph_circumference
from berge.shrink import reduce_to_happy
from berge.verify import verify

from .conftest import WORKED
from .test_shrink import WORKED_TRACE


def report(number, ok, detail, seconds, limit):
    within = seconds < limit
    line = f"criterion {number:>2}: {'PASS' if ok and within else 'FAIL'}  {detail}  ({seconds:.1f}s, limit {limit}s)"
    print(line)
    return ok and within, line


def timed(fn):
    t = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t


def crit1():
    got = (f(20, 10, 3, 4), f(8, 6, 3, 2), fstar(8, 6, 3, 2), hsp(6, 1, 3, 2), n_threshold(12, 3))
    return got == (104, 14, 8, 12, 17), f"f, f*, hsp, threshold = {got}"


def crit2():
    bad = []
    points = 0
    for r in (3, 4):
        for k in range(r, 11):
            for n in range(k, 17):
                for a in range(1, (k - 1) // 2 + 1):
                    points += 1
                    h = build_HCal(n, k, r, a)
                    if h.m != f(n, k, r, a):
                        bad.append(("count", n, k, r, a))
                    if a >= 2 and not (is_sperner(h) and is_2connected(h) and validate(h).valid):
                        bad.append(("structure", n, k, r, a))
    hn = build_Hnka(14, 11, 3).m
    return hn == 46 and not bad, f"e(H_14,11,3)={hn}; {points} HCal points, {len(bad)} bad"


def crit3():
    c1 = circumference(build_HCal(8, 6, 3, 2))[0]
    c2 = circumference(build_Hnka(6, 5, 2))[0]
    return (c1, c2) == (5, 4), f"c(HCal(8,6,3,2))={c1}, c(H(6,5,2))={c2}"


def _grid_detail(rep):
    held = sum(p.status == "holds" for p in rep.points)
    fails = [(p.n, p.k, p.extremal, p.bound) for p in rep.failures]
    return f"{held} points hold, failures (n,k,extremal,bound)={fails}"


def crit4():
    rep = verify("main2conn", {"nmax": 5, "k": [4, 5], "r": [3]})
    return rep.holds, _grid_detail(rep)


def crit5():
    rep = verify("main_paths", {"nmax": 5, "k": [3, 4, 5], "r": [3]})
    return rep.holds, _grid_detail(rep)


def crit6():
    rep = verify("kopylov", {"nmax": 8, "k": [5, 6, 7]})
    checked = sum(p.checked for p in rep.points)
    return rep.holds and checked > 0, f"{checked} graph/k pairs classified, {len(rep.failures)} failures"


def crit7():
    rep = verify("lifting", {"nmax": 12, "r": [3, 4], "samples": 500, "seed": 2024})
    instances = sum(p.checked for p in rep.points)
    cycles = sum(p.extremal or 0 for p in rep.points)
    ok = rep.holds and instances >= 500 and cycles > 0
    return ok, f"{instances} happy instances, {cycles} shadow cycles lifted, {len(rep.failures)} failures"


def crit8():
    rep = verify("shrink", {"nmax": 10, "r": [3], "samples": 200, "seed": 2024})
    instances = sum(p.checked for p in rep.points)
    trace = reduce_to_happy(Hypergraph.from_edges(6, WORKED, 3), 6)
    exact = trace.to_json() == WORKED_TRACE
    ok = rep.holds and instances >= 200 and exact
    return ok, f"{instances} reductions, {len(rep.failures)} failures, worked trace exact={exact}"


def _exhaustive_antichain(sets):
    best = 0

    def grow(i, chosen):
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + len(sets) - i <= best:
            return
        for j in range(i, len(sets)):
            s = sets[j]
            if all(s & c not in (s, c) for c in chosen):
                chosen.append(s)
                grow(j + 1, chosen)
                chosen.pop()

    grow(0, [])
    return best


def crit9():
    mismatches, compared = 0, 0
    for level in graph_levels(6)[1:]:
        for g in level:
            for r in (2, 3, 4):
                sets = [sum(1 << v for v in c) for c in enumerate_cliques(g, r).members]
                if len(sets) > 20:
                    continue
                compared += 1
                mismatches += max_sperner_cliques(g, r)[0] != _exhaustive_antichain(sets)
    rep = verify("nsp", {"nmax": 7, "k": [5, 6], "r": [2, 3]})
    checked = sum(p.checked for p in rep.points)
    ok = mismatches == 0 and rep.holds and checked > 0
    return ok, f"{compared} posets compared, {mismatches} mismatches; bound checked on {checked} graphs, {len(rep.failures)} failures"


def crit10():
    bad = [(n, k, r) for n in range(1, 31) for k in range(1, 16) for r in range(1, 7)
           if not convexity_check(n, k, r, sequences=False).convex]
    seq_ok = convexity_check(30, 15, 6).sequences_ok
    return not bad and seq_ok, f"{30 * 15 * 6} parameter triples, {len(bad)} non-convex"


CRITERIA = [
    (1, crit1, 1), (2, crit2, 60), (3, crit3, 10), (4, crit4, 600), (5, crit5, 600),
    (6, crit6, 900), (7, crit7, 300), (8, crit8, 600), (9, crit9, 600), (10, crit10, 1),
]


@pytest.mark.parametrize("number,fn,limit", CRITERIA, ids=[f"criterion{n}" for n, _, _ in CRITERIA])
def test_criterion(number, fn, limit, capsys):
    ok, detail, seconds = timed(fn)
    with capsys.disabled():
        print()
        passed, line = report(number, ok, detail, seconds, limit)
    assert passed, line


if __name__ == "__main__":
    results = []
    for number, fn, limit in CRITERIA:
        ok, detail, seconds = timed(fn)
        results.append(report(number, ok, detail, seconds, limit)[0])
    print(f"{sum(results)}/{len(results)} criteria pass")
