"""Closed-form extremal bounds, their thresholds in ``n``, and convexity checks.

All arithmetic is exact: Python integers for counts, ``Fraction`` for the one
rational threshold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

INFINITY = float("inf")


class DomainError(ValueError):
    pass


def _check_f(n: int, k: int, r: int, a: int) -> None:
    if min(n, k, r, a) < 0:
        raise DomainError(f"negative parameter in ({n}, {k}, {r}, {a})")
    if r < 1:
        raise DomainError("r must be positive")
    if not max(0, k - n) <= a <= k:
        raise DomainError(f"a={a} outside [max(0, k-n), k] = [{max(0, k - n)}, {k}]")


def f(n: int, k: int, r: int, a: int) -> int:
    _check_f(n, k, r, a)
    top = k - a
    return comb(top, min(r, top // 2)) + (n - k + a) * comb(a, min(r - 1, a // 2))


def fstar(n: int, k: int, r: int, a: int) -> int:
    _check_f(n, k, r, a)
    return comb(k - a, r) + (n - k + a) * comb(a, r - 1)


def f_slope(k: int, r: int, a: int) -> int:
    """Coefficient of ``n`` in ``f(n, k, r, a)``."""
    return comb(a, min(r - 1, a // 2))


def hsp(n: int, l: int, r: int, d: int) -> int:
    if l < 0 or d < l or d > n + l:
        raise DomainError(f"hsp needs 0 <= l <= d <= n + l, got l={l}, d={d}, n={n}")
    return f(n, n + l, r, d)


def _check_main(n: int, k: int, r: int) -> None:
    if not n >= k >= r >= 3:
        raise DomainError(f"need n >= k >= r >= 3, got n={n}, k={k}, r={r}")


def main_cycle_bound(n: int, k: int, r: int) -> int:
    _check_main(n, k, r)
    return max(f(n, k, r, (k - 1) // 2), f(n, k, r, 2))


def main_path_bound(n: int, k: int, r: int) -> int:
    _check_main(n, k, r)
    return max(f(n, k, r, (k - 1) // 2), f(n, k, r, 1))


def _threshold(k: int, r: int, other: int):
    if not k >= r >= 3:
        raise DomainError(f"need k >= r >= 3, got k={k}, r={r}")
    t = (k - 1) // 2
    # both sides are affine in n; compare slopes before scanning
    st, so = f_slope(k, r, t), f_slope(k, r, other)
    n = k
    while True:
        gap = f(n, k, r, other) - f(n, k, r, t)
        if gap <= 0:
            return n
        if st <= so:
            return INFINITY
        # the gap shrinks by st - so per step; skip the steps that cannot close it
        n += max(1, (gap - 1) // (st - so))


def n_threshold(k: int, r: int):
    """Smallest ``n >= k`` with ``f(n,k,r,t) >= f(n,k,r,2)``, ``t = (k-1)//2``."""
    return _threshold(k, r, 2)


def n_threshold_path(k: int, r: int):
    """Smallest ``n >= k`` with ``f(n,k,r,t) >= f(n,k,r,1)``."""
    return _threshold(k, r, 1)


def n_threshold_closed(k: int, r: int, other: int = 2):
    """The same crossover solved from the affine forms; used to cross-check the scan."""
    t = (k - 1) // 2
    st, so = f_slope(k, r, t), f_slope(k, r, other)
    # f(n,k,r,a) = base(a) + (n - k + a) * slope(a)
    bt = f(k, k, r, t) - t * st
    bo = f(k, k, r, other) - other * so
    # bt + (n-k+t) st >= bo + (n-k+other) so
    lhs_const = bt + (t - k) * st - bo - (other - k) * so
    if st == so:
        return k if lhs_const >= 0 else INFINITY
    if st < so:
        return k if lhs_const + k * (st - so) >= 0 else INFINITY
    need = Fraction(-lhs_const, st - so)
    n = max(k, -(-need.numerator // need.denominator))
    return n


def lym_cap(h: int, r: int) -> int:
    return comb(h, min(r, h // 2))


def kpath_density_bound(n: int, k: int, r: int) -> Fraction:
    """``(n-2)/(k-3) * C(k-1, min(r, (k-1)//2))``; above it a 2-connected graph is k-path connected."""
    if k <= 3:
        raise DomainError("k must exceed 3")
    return Fraction(n - 2, k - 3) * lym_cap(k - 1, r)


def block_density_cap(t: int, r: int, interior: int) -> int:
    """Edge cap ``C(t, min(r-1, t//2)) * interior`` for a deleted happy 2-block."""
    return comb(t, min(r - 1, t // 2)) * interior


def is_convex(seq) -> bool:
    return all(seq[i - 1] + seq[i + 1] >= 2 * seq[i] for i in range(1, len(seq) - 1))


@dataclass
class ConvexityReport:
    n: int
    k: int
    r: int
    checked: int = 0
    violations: list[int] = field(default_factory=list)
    sequences_ok: bool = True

    @property
    def convex(self) -> bool:
        return not self.violations and self.sequences_ok


def convexity_check(n: int, k: int, r: int, sequences: bool = True) -> ConvexityReport:
    """Discrete convexity of ``a -> f(n,k,r,a)`` on every interior point of its domain.

    With ``sequences`` the building blocks ``C(i, i//2)``, ``C(i, r)`` and
    their fusion ``C(i, min(r, i//2))`` are also checked up to index 64.
    """
    if min(n, k, r) < 1:
        raise DomainError("n, k, r must be positive")
    rep = ConvexityReport(n, k, r)
    lo = max(0, k - n)
    vals = {a: f(n, k, r, a) for a in range(lo, k + 1)}
    for a in range(lo + 1, k):
        rep.checked += 1
        if vals[a - 1] + vals[a + 1] < 2 * vals[a]:
            rep.violations.append(a)
    if sequences:
        rep.sequences_ok = (
            is_convex([comb(i, i // 2) for i in range(65)])
            and is_convex([comb(i, r) for i in range(65)])
            and is_convex([comb(i, min(r, i // 2)) for i in range(65)])
        )
    return rep


def argmax_endpoint_ok(n: int, k: int, r: int) -> bool:
    """Maximum of ``f`` over ``a`` in ``[lo, (k-1)//2]`` is attained at an endpoint."""
    t = (k - 1) // 2
    lo = max(0, k - n)
    if t < lo:
        return True
    vals = [f(n, k, r, a) for a in range(lo, t + 1)]
    return max(vals) == max(vals[0], vals[-1])
