"""Bipartite matching by augmenting paths, Hall violators and Koenig covers.

Left vertices are ``0..len(adj)-1``; ``adj[p]`` lists right vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def _augment(p: int, adj: Sequence[Sequence[int]], match_r: dict, seen: set) -> bool:
    # iterative would be longer; recursion depth is bounded by the left side size
    for a in adj[p]:
        if a in seen:
            continue
        seen.add(a)
        if a not in match_r or _augment(match_r[a], adj, match_r, seen):
            match_r[a] = p
            return True
    return False


def max_matching(adj: Sequence[Sequence[int]]) -> dict[int, int]:
    """Maximum matching as a map left -> right."""
    match_r: dict = {}
    for p in range(len(adj)):
        _augment(p, adj, match_r, set())
    return {p: a for a, p in match_r.items()}


def alternating_reach(adj: Sequence[Sequence[int]], matching: dict[int, int], roots) -> tuple[set, set]:
    """Left and right vertices reachable from ``roots`` by alternating paths."""
    match_r = {a: p for p, a in matching.items()}
    left, right = set(roots), set()
    stack = list(roots)
    while stack:
        p = stack.pop()
        for a in adj[p]:
            if a in right:
                continue
            right.add(a)
            q = match_r.get(a)
            if q is not None and q not in left:
                left.add(q)
                stack.append(q)
    return left, right


@dataclass
class CoverResult:
    matching: dict[int, int] | None
    violator: set[int] | None = None
    neighbourhood: set | None = None

    @property
    def covers(self) -> bool:
        return self.matching is not None


def matching_cover(adj: Sequence[Sequence[int]]) -> CoverResult:
    """A matching saturating the left side, or a Hall violator ``S`` with ``|S| > |N(S)|``."""
    m = max_matching(adj)
    free = [p for p in range(len(adj)) if p not in m]
    if not free:
        return CoverResult(m)
    left, right = alternating_reach(adj, m, [free[0]])
    return CoverResult(None, left, right)


def koenig_cover(adj: Sequence[Sequence[int]], matching: dict[int, int]) -> tuple[set, set]:
    """Minimum vertex cover ``(left part, right part)`` from a maximum matching."""
    free = [p for p in range(len(adj)) if p not in matching]
    z_left, z_right = alternating_reach(adj, matching, free)
    return set(range(len(adj))) - z_left, z_right
