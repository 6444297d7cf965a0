import os
import random
from itertools import combinations

import pytest

from berge.bounds import main_cycle_bound, main_path_bound
from berge.connectivity import is_2connected, is_connected
from berge.constructions import build_HCal
from berge.enumeration import (
    CAPS, CapExceeded, EnumStats, SampleAudit, SearchSpace, cap, candidate_edges, enumerate_space,
    extremal_number, random_happy_sperner, random_sperner, random_unhappy_instance, repair_2connected,
)
from berge.hypergraph import is_happy, is_sperner, unhappy_edges
from berge.search import circumference

from .conftest import brute_circumference


def antichain_count(n, r):
    pool = [frozenset(c) for s in range(2, r + 1) for c in combinations(range(n), s)]
    count = 0
    for mask in range(1 << len(pool)):
        chosen = [pool[i] for i in range(len(pool)) if mask >> i & 1]
        if all(not a <= b and not b <= a for a, b in combinations(chosen, 2)):
            count += 1
    return count


def test_all_labeled_graphs_on_four_vertices():
    space = SearchSpace(4, 2, sperner=False, dedup="labeled")
    assert sum(1 for _ in enumerate_space(space)) == 64


def test_sperner_count_matches_antichain_oracle():
    oracle = antichain_count(4, 3)
    got = list(enumerate_space(SearchSpace(4, 3, dedup="labeled")))
    assert len(got) == oracle == 113
    assert len({h.edges for h in got}) == oracle
    assert all(h.is_canonical() and is_sperner(h) for h in got)


@pytest.mark.parametrize("objective,k", [("cycle", 3), ("cycle", 4), ("path", 2), ("path", 3)])
def test_pruned_skips_add_up(objective, k):
    stats = EnumStats()
    kept = list(enumerate_space(SearchSpace(4, 3, objective=objective, k=k, dedup="labeled"),
                                stats=stats, count_skips=True))
    assert stats.visited + stats.skipped == antichain_count(4, 3)
    assert len(kept) == stats.emitted == stats.visited


def test_filter_audit_on_full_stream():
    space = SearchSpace(5, 3, two_connected=True, objective="cycle", k=4, dedup="labeled")
    for h in enumerate_space(space):
        assert is_2connected(h) and is_sperner(h)
        assert brute_circumference(h.n, h.edges) < 4


def test_pruned_stream_equals_filtered_full_stream():
    full = [h for h in enumerate_space(SearchSpace(4, 3, dedup="labeled"))
            if is_2connected(h) and circumference(h)[0] < 4]
    pruned = list(enumerate_space(SearchSpace(4, 3, two_connected=True, objective="cycle", k=4, dedup="labeled")))
    assert [h.edges for h in pruned] == [h.edges for h in full]


def test_sharding_partitions_the_walk():
    space = SearchSpace(4, 3, dedup="labeled")
    whole = [h.edges for h in enumerate_space(space)]
    parts = [h.edges for i in range(3) for h in enumerate_space(space, shard=(i, 3))]
    assert sorted(parts) == sorted(whole) and len(parts) == len(whole)


def test_extremal_examples():
    m, h = extremal_number(4, 4, 3, "cycle")
    assert m <= main_cycle_bound(4, 4, 3) == 6 and h is not None and h.m == m
    m, _ = extremal_number(5, 5, 3, "cycle")
    assert m >= build_HCal(5, 5, 3, 2).m
    assert m == 7 == main_cycle_bound(5, 5, 3)
    m, h = extremal_number(5, 4, 3, "path")
    assert m <= main_path_bound(5, 4, 3) and is_connected(h)


def test_iso_mode_on_graphs():
    space = SearchSpace(6, 2, two_connected=True, objective="cycle", k=5, dedup="iso")
    graphs = list(enumerate_space(space))
    assert graphs and all(is_2connected(g) and circumference(g)[0] < 5 for g in graphs)
    # labeled and iso runs agree on the maximum
    assert max(g.m for g in graphs) == extremal_number(6, 5, 2, "cycle", dedup="labeled")[0]


def test_iso_mode_on_hypergraphs_dedups():
    labeled = list(enumerate_space(SearchSpace(4, 3, two_connected=True, dedup="labeled")))
    iso = list(enumerate_space(SearchSpace(4, 3, two_connected=True, dedup="iso")))
    assert 0 < len(iso) < len(labeled)


def test_caps(monkeypatch):
    monkeypatch.delenv("BERGE_CAP", raising=False)
    assert cap("exhaustive") == CAPS["exhaustive"] == 7
    with pytest.raises(CapExceeded):
        list(enumerate_space(SearchSpace(8, 3)))
    with pytest.raises(CapExceeded):
        list(enumerate_space(SearchSpace(11, 2, objective="cycle", k=4)))
    monkeypatch.setenv("BERGE_CAP", "3")
    with pytest.raises(CapExceeded):
        list(enumerate_space(SearchSpace(4, 2)))


def test_candidate_order_is_canonical():
    cands = candidate_edges(4, 3)
    assert cands == sorted(cands) and cands[:2] == [(0, 1), (0, 1, 2)]


def test_random_generators_respect_filters():
    rng = random.Random(7)
    audit = SampleAudit()
    for _ in range(30):
        h = random_unhappy_instance(rng.randint(5, 9), rng, audit=audit)
        assert is_sperner(h) and is_2connected(h) and unhappy_edges(h)
        assert circumference(h, cutoff=h.n)[0] < h.n
    assert audit.accepted == 30 and audit.attempts >= 30
    for _ in range(30):
        h = random_happy_sperner(rng.randint(4, 10), rng.choice([3, 4]), rng)
        assert is_sperner(h) and is_happy(h)
    for _ in range(30):
        h = random_sperner(8, 3, rng)
        assert is_sperner(h)
        fixed = repair_2connected(h, rng)
        assert fixed is None or (is_2connected(fixed) and is_sperner(fixed))


def test_generators_are_deterministic():
    a = [random_unhappy_instance(8, random.Random(3)).edges for _ in range(2)]
    assert a[0] == a[1]
