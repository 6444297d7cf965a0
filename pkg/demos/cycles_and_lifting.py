"""Find a longest Berge cycle, then lift cycles of the 2-shadow back to the hypergraph.

A hypergraph in which every edge is happy has the property that any shadow
cycle of length at least the edge size lifts to a Berge cycle on the same
vertices. This script shows both directions on one random instance.
"""

import random

from berge.enumeration import random_happy_sperner
from berge.hypergraph import is_happy, shadow
from berge.search import check_witness, circumference, lift_shadow_cycle, shadow_cycles

rng = random.Random(7)
h = random_happy_sperner(7, 3, rng)
while circumference(h)[0] < 5 or all(len(e) == 2 for e in h.edges):  # want a real 3-edge
    h = random_happy_sperner(7, 3, rng)
print("edges:", [list(e) for e in h.edges])
print("happy:", is_happy(h))

c, w = circumference(h)
print(f"circumference {c}: base {w.base_vertices}, edges {w.edge_indices}")
print("witness problems:", check_witness(h, w) or "none")

g = shadow(h, 2)
lifted = 0
for cyc in shadow_cycles(g, min_length=h.r, limit=50):
    bw = lift_shadow_cycle(h, cyc)
    assert not check_witness(h, bw)
    lifted += 1
    if lifted <= 3:
        print(f"shadow cycle {cyc} -> Berge edges {bw.edge_indices}")
print(f"lifted {lifted} shadow cycles without a failure")
