import csv
import io

from berge.hypergraph import Hypergraph
from berge.verify import CSV_COLUMNS, slow_circumference, slow_longest_path, verify

from .conftest import brute_circumference, brute_longest_path


def test_main2conn_small_grid_holds():
    rep = verify("main2conn", {"nmax": 5, "k": [4, 5], "r": [3]})
    assert rep.holds
    rows = list(csv.DictReader(io.StringIO(rep.to_csv())))
    assert tuple(rows[0]) == CSV_COLUMNS
    statuses = {(int(r["n"]), int(r["k"])): r["status"] for r in rows}
    assert statuses[(5, 5)] == "holds" and statuses[(3, 4)] == "out-of-domain"
    assert [(p.n, p.k) for p in rep.sharpness_hits] == [(5, 5)]


def test_main_paths_beyond_k_vertices_holds():
    rep = verify("main_paths", {"nmax": 5, "k": [3, 4], "r": [3]})
    by_point = {(p.n, p.k): p for p in rep.points}
    for (n, k), p in by_point.items():
        if n > k:
            assert p.status == "holds"


def test_main_paths_at_n_equal_k_fails_with_revalidated_witness():
    # with n = k no family can hold a path of k edges, so everything is admissible
    rep = verify("main_paths", {"nmin": 4, "nmax": 4, "k": [4], "r": [3]})
    (p,) = rep.points
    assert p.status == "FAILURE" and p.extremal == 6 and p.bound == 4
    h = Hypergraph.from_edges(p.witness["n"], p.witness["edges"], p.witness["r"])
    assert brute_longest_path(h.n, h.edges) == 3


def test_report_is_deterministic():
    g = {"nmax": 10, "r": [3], "samples": 15, "seed": 5}
    assert verify("shrink", g).to_json() == verify("shrink", g).to_json()
    g = {"nmax": 9, "r": [3, 4], "samples": 15, "seed": 5}
    assert verify("lifting", g).to_json() == verify("lifting", g).to_json()


def test_slow_oracles_agree_with_brute_force():
    hs = [
        Hypergraph.from_edges(5, [[0, 1, 2], [2, 3], [3, 4], [0, 4], [1, 4]]),
        Hypergraph.from_edges(4, [[0, 1, 2], [0, 1, 3]]),
        Hypergraph.from_edges(6, [[0, 1, 2], [0, 3], [1, 4], [2, 5], [3, 4], [4, 5]]),
    ]
    for h in hs:
        assert slow_circumference(h) == brute_circumference(h.n, h.edges)
        assert slow_longest_path(h) == brute_longest_path(h.n, h.edges)


def test_other_checkers_hold_on_small_grids():
    assert verify("nsp", {"nmax": 6, "k": [5], "r": [2, 3]}).holds
    assert verify("kpath", {"nmax": 6, "k": [4, 5], "r": [2]}).holds
    assert verify("kopylov", {"nmax": 7, "k": [5, 6]}).holds
    assert verify("pps", {"nmax": 6, "k": [0, 1], "r": [2, 3]}).holds
    assert verify("component", {"nmax": 4, "k": [3, 4], "r": [3]}).holds
    assert verify("cutedge", {"nmax": 5, "k": [4], "r": [3]}).holds


def test_sharded_run_matches_single_worker():
    a = verify("main2conn", {"nmax": 5, "k": [5], "r": [3]}, workers=1)
    b = verify("main2conn", {"nmax": 5, "k": [5], "r": [3]}, workers=2)
    assert a.to_csv() == b.to_csv()
