"""Walk the shrink engine through a small unhappy hypergraph.

Each step rewrites one local configuration, keeps the family Sperner and
2-connected, never lengthens the circumference past k-1, and loses at most
as many edges as it loses vertices. The run ends on a happy hypergraph.
"""

from berge.hypergraph import Hypergraph, is_happy, unhappy_edges
from berge.search import circumference
from berge.shrink import cumulative_problems, reduce_to_happy

h = Hypergraph.from_edges(6, [[0, 1, 2], [0, 3], [1, 4], [2, 5], [3, 4], [4, 5]], 3)
k = 6
print("start:", [list(e) for e in h.edges])
print("unhappy edges:", [list(h.edges[i]) for i in unhappy_edges(h)])
print("circumference:", circumference(h)[0])

trace = reduce_to_happy(h, k)
for step, state in zip(trace.steps, trace.states[1:]):
    print(f"{step.kind} {step.params}: (n, m, size sum) {step.before} -> {step.after}")
    print("   now:", [list(e) for e in state.edges])

print("terminal:", trace.terminal, "| happy:", is_happy(trace.final))
print("circumference after:", circumference(trace.final)[0])
print("bookkeeping problems:", cumulative_problems(trace) or "none")
