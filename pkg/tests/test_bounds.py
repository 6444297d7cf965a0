import time
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from berge.bounds import (
    INFINITY, DomainError, argmax_endpoint_ok, block_density_cap, convexity_check, f, fstar, hsp, is_convex,
    kpath_density_bound, main_cycle_bound, main_path_bound, n_threshold, n_threshold_closed, n_threshold_path,
)


def test_f_examples():
    assert f(4, 4, 3, 2) == 6
    assert f(20, 10, 3, 4) == 104 == fstar(20, 10, 3, 4)
    assert f(8, 6, 3, 2) == 14 and fstar(8, 6, 3, 2) == 8


def test_hsp_examples():
    assert hsp(6, 1, 3, 2) == f(6, 7, 3, 2) == 12
    assert hsp(5, 1, 2, 2) == f(5, 6, 2, 2) == 8
    for n in range(3, 9):
        for d in range(0, n + 1):
            assert hsp(n, 0, 3, d) == f(n, n, 3, d)


def test_main_bound_examples():
    assert main_cycle_bound(20, 10, 3) == 104
    assert f(20, 10, 3, 2) == 80
    assert main_cycle_bound(4, 4, 3) == 6
    assert f(4, 4, 3, 1) == 4


def test_path_bound_sanity_grid():
    # the relation holds exactly where f(.,1) <= f(.,2); near n = k the pendant term loses to C(k-1, .)
    broken = 0
    for n in range(3, 25):
        for k in range(3, n + 1):
            for r in range(3, k + 1):
                ok = main_path_bound(n, k, r) >= main_cycle_bound(n, k, r) - (f(n, k, r, 2) - f(n, k, r, 1))
                if f(n, k, r, 1) <= f(n, k, r, 2):
                    assert ok
                else:
                    broken += not ok
                assert main_path_bound(n, k, r) >= f(n, k, r, 1)
    assert broken > 0
    assert f(7, 7, 3, 1) == 21 > f(7, 7, 3, 2) == 14


def test_domain_errors():
    with pytest.raises(DomainError):
        f(5, 8, 3, 2)  # a below k - n
    with pytest.raises(DomainError):
        main_cycle_bound(4, 5, 3)
    with pytest.raises(DomainError):
        main_cycle_bound(5, 5, 2)
    with pytest.raises(DomainError):
        hsp(5, 2, 3, 1)


def test_threshold_examples():
    assert n_threshold(12, 3) == 17
    for n in (16, 17):
        assert (f(n, 12, 3, 5) >= f(n, 12, 3, 2)) == (n >= 17)


def test_threshold_scan_matches_closed_form():
    for r in range(3, 9):
        for k in range(r, 40):
            assert n_threshold(k, r) == n_threshold_closed(k, r, 2)
            assert n_threshold_path(k, r) == n_threshold_closed(k, r, 1)


def test_threshold_ordering_and_growth():
    # f(n,k,r,1) exceeds f(n,k,r,2) around the crossover, so the path threshold is the later one
    for r in range(3, 9):
        for k in range(max(r, 5), 30):
            assert n_threshold_path(k, r) >= n_threshold(k, r)
    assert (n_threshold_path(12, 3), n_threshold(12, 3)) == (21, 17)
    # order of magnitude 2^(r-1) k / r for large k
    for r in range(3, 9):
        k = 60 * r
        ratio = n_threshold(k, r) / (2 ** (r - 1) * k / r)
        assert 0.1 < ratio < 10


def test_convexity_examples():
    assert convexity_check(20, 10, 3).convex and convexity_check(20, 10, 3).checked == 9
    assert convexity_check(8, 6, 3).convex
    assert is_convex([comb(i, i // 2) for i in range(65)])


def test_convexity_grid_is_fast():
    t = time.perf_counter()
    bad = [(n, k, r) for n in range(1, 31) for k in range(1, 16) for r in range(1, 7)
           if not convexity_check(n, k, r, sequences=False).convex]
    assert bad == [] and time.perf_counter() - t < 1


@given(st.integers(3, 40), st.integers(3, 20), st.integers(3, 6))
def test_argmax_at_endpoint(n, k, r):
    if n >= k >= r:
        assert argmax_endpoint_ok(n, k, r)
        t = (k - 1) // 2
        assert t < 2 or main_cycle_bound(n, k, r) == max(f(n, k, r, a) for a in range(2, t + 1))


def test_small_helpers():
    assert kpath_density_bound(10, 5, 3) == 4 * comb(4, 2)
    assert block_density_cap(3, 3, 2) == comb(3, 1) * 2
    assert INFINITY > 10 ** 9
