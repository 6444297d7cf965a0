"""Build the three extremal families and set their sizes against the bound formulas.

Run with ``python3 demos/constructions_and_bounds.py``.
"""

from berge.bounds import f, main_cycle_bound, main_path_bound
from berge.constructions import construct
from berge.connectivity import is_2connected, is_connected
from berge.hypergraph import is_sperner
from berge.search import circumference

# The graph family: a clique on k-a vertices joined to a independent vertices
# through a shared a-set. Edge count is exactly f(n, k, 2, a).
n, k = 9, 7
print(f"graph family, n={n}, k={k}")
for a in range(1, (k - 1) // 2 + 1):
    g, spec = construct("hnka", n=n, k=k, a=a)
    c, _ = circumference(g)
    print(f"  a={a}: {g.m} edges (f = {f(n, k, 2, a)}), circumference {c}, blocks {sorted(spec.partition)}")

# The hypergraph analogue is Sperner; with a = 1 the shared set is a cut vertex.
n, k, r = 8, 6, 3
print(f"\nhypergraph family, n={n}, k={k}, r={r}")
for a in (1, 2):
    h, _ = construct("hcal", n=n, k=k, r=r, a=a)
    c, w = circumference(h)
    print(f"  a={a}: {h.m} edges, Sperner {is_sperner(h)}, 2-connected {is_2connected(h)}, "
          f"circumference {c} < {k}")
print(f"  cycle bound at this point: {main_cycle_bound(n, k, r)}")

# Pendant construction: a dense core with pairs of pendant edges hung on two hubs.
h, spec = construct("fnkrs", k=12, r=3, s=2)
# 14 vertices and 124 edges is past what the exact path search handles quickly,
# so only the structure is reported here.
print(f"\npendant family: n={h.n}, {h.m} edges, Sperner {is_sperner(h)}, connected {is_connected(h)}")
print(f"  path bound at n={h.n}, k=12, r=3: {main_path_bound(h.n, 12, 3)}")
