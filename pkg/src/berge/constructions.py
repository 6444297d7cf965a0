"""Extremal families: dense graphs ``H(n,k,a)``, their Sperner hypergraph analogues, and pendant-block families.

Every builder returns a canonical :class:`Hypergraph`; partition labels live
in a separate :class:`ConstructionSpec` so the hypergraph stays label-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .bounds import DomainError
from .hypergraph import Graph, Hypergraph


@dataclass
class ConstructionSpec:
    family: str
    params: dict
    partition: dict[str, list[int]]
    notes: list[str] = field(default_factory=list)

    def sizes(self) -> dict[str, int]:
        return {name: len(vs) for name, vs in self.partition.items()}

    def to_dict(self) -> dict:
        return {"family": self.family, "params": self.params, "partition": self.partition, "notes": self.notes}


def _blocks(*sizes: int) -> list[list[int]]:
    out, start = [], 0
    for s in sizes:
        out.append(list(range(start, start + s)))
        start += s
    return out


def hnka_spec(n: int, k: int, a: int) -> ConstructionSpec:
    if not (k >= 4 and n >= k and 1 <= a and 2 * a < k):
        raise DomainError(f"H(n,k,a) needs k >= 4, n >= k, 1 <= a < k/2; got n={n}, k={k}, a={a}")
    A, B, C = _blocks(a, n - k + a, k - 2 * a)
    return ConstructionSpec("Hnka", {"n": n, "k": k, "a": a}, {"A": A, "B": B, "C": C})


def build_Hnka(n: int, k: int, a: int) -> Graph:
    """Graph with parts ``|A|=a``, ``|B|=n-k+a``, ``|C|=k-2a``: all A-B pairs and all pairs inside A and C."""
    p = hnka_spec(n, k, a).partition
    edges = [(x, y) for x in p["A"] for y in p["B"]]
    edges += combinations(sorted(p["A"] + p["C"]), 2)
    return Graph.from_edges(n, edges)


def _hcal_sizes(k: int, r: int, a: int) -> tuple[int, int, list[str]]:
    """Subset sizes for the two edge classes, with the substitutions that keep counts unchanged."""
    notes = []
    s = min(r, (k - a) // 2)
    q = min(r - 1, a // 2)
    if q == 0:
        # C(a, 0) = C(a, a): take all of B instead of the empty set
        q = a
        notes.append(f"empty B-part replaced by all {a} vertices of B")
    if s < 2 or s <= q:
        alt = k - a - s
        if alt >= 2 and alt > q:
            notes.append(f"A-B edges of size {s} replaced by complementary size {alt}")
            s = alt
        else:
            notes.append(f"A-B edges keep degenerate size {s}")
    return s, q, notes


def hcal_spec(n: int, k: int, r: int, a: int) -> ConstructionSpec:
    if not (n >= k >= r and 1 <= a <= (k - 1) // 2):
        raise DomainError(f"needs n >= k >= r and 1 <= a <= (k-1)//2; got n={n}, k={k}, r={r}, a={a}")
    A, B, C = _blocks(k - 2 * a, a, n - k + a)
    s, q, notes = _hcal_sizes(k, r, a)
    return ConstructionSpec(
        "HCal", {"n": n, "k": k, "r": r, "a": a, "dense_size": s, "pendant_size": q + 1},
        {"A": A, "B": B, "C": C}, notes,
    )


def build_HCal(n: int, k: int, r: int, a: int) -> Hypergraph:
    """All ``s``-subsets of ``A u B`` plus ``{c} u e'`` for ``c`` in ``C`` and ``q``-subsets ``e'`` of ``B``.

    Here ``s = min(r, (k-a)//2)`` and ``q = min(r-1, a//2)``. When the literal
    sizes would give singleton edges or nested edges, an equinumerous
    complementary size is used (see :func:`hcal_spec` notes).
    """
    spec = hcal_spec(n, k, r, a)
    p = spec.partition
    s, q = spec.params["dense_size"], spec.params["pendant_size"] - 1
    edges = list(combinations(p["A"] + p["B"], s))
    edges += [(c,) + e for c in p["C"] for e in combinations(p["B"], q)]
    return Hypergraph.from_edges(n, edges, r)


def fnkrs_spec(k: int, r: int, s: int) -> ConstructionSpec:
    if not (k >= 4 * r >= 12 and s >= 1):
        raise DomainError(f"needs k >= 4r >= 12 and s >= 1; got k={k}, r={r}, s={s}")
    blocks = _blocks(k - 2, *([r - 1] * s))
    C = blocks[0]
    part = {"C": C, "c1": [C[0]], "c2": [C[1]]}
    for i, blk in enumerate(blocks[1:], 1):
        part[f"A{i}"] = blk
    n = k - 2 + s * (r - 1)
    return ConstructionSpec(
        "Fnkrs", {"n": n, "k": k, "r": r, "s": s}, part,
        [f"{2 * s} pendant edges: one per block and special vertex"],
    )


def build_Fnkrs(k: int, r: int, s: int) -> Hypergraph:
    """All ``r``-subsets of ``C`` (``|C| = k-2``) plus ``A_i u {c_j}`` for ``s`` blocks of size ``r-1`` and ``j = 1, 2``."""
    spec = fnkrs_spec(k, r, s)
    p = spec.partition
    edges = list(combinations(p["C"], r))
    for i in range(1, s + 1):
        for c in (p["c1"][0], p["c2"][0]):
            edges.append(tuple(p[f"A{i}"]) + (c,))
    return Hypergraph.from_edges(spec.params["n"], edges, r)


def construct(family: str, **params) -> tuple[Hypergraph, ConstructionSpec]:
    family = family.lower()
    if family == "hnka":
        return build_Hnka(params["n"], params["k"], params["a"]), hnka_spec(params["n"], params["k"], params["a"])
    if family == "hcal":
        args = (params["n"], params["k"], params["r"], params["a"])
        return build_HCal(*args), hcal_spec(*args)
    if family == "fnkrs":
        args = (params["k"], params["r"], params["s"])
        return build_Fnkrs(*args), fnkrs_spec(*args)
    raise DomainError(f"unknown family {family!r}")
