"""Saturation verdicts with the fast checker and the naive oracle.

Run: python3 demos/02_saturation_checks.py
"""

from k4sat.constructions import construct_complete_bipartite, construct_f
from k4sat.graph import build_graph, cycle_graph
from k4sat.saturation import (
    contains_k4_minus,
    is_k4_minus_saturated,
    naive_is_saturated,
    verify_verdict,
)

paw = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
cases = {
    "C4": cycle_graph(4),
    "paw": paw,
    "C5": cycle_graph(5),
    "K_(1,9)": construct_complete_bipartite(10, 1),
    "F_10(0,2)": construct_f(10, 0, 2)[0],
}

for name, G in cases.items():
    fast = is_k4_minus_saturated(G)
    slow = naive_is_saturated(G)
    print(f"{name:>10}: {fast.to_dict()}  naive agrees: {fast.agrees_with(slow)}  witness ok: {verify_verdict(G, fast)}")

# A non-edge witness is a pair whose addition leaves the graph diamond-free.
G = cases["C5"]
u, v = is_k4_minus_saturated(G).nonedge_witness
print("C5 + edge", (u, v), "contains a diamond?", contains_k4_minus(G.plus_edge(u, v)) is not None)

# For b < 2 most members are not saturated. The exceptions are a = n - 5 with b = 0,
# and a in {0, n - 6} with b = 1.
for a, b in [(2, 0), (5, 0), (0, 1), (2, 1), (4, 1)]:
    print(f"F_10({a},{b}) saturated:", is_k4_minus_saturated(construct_f(10, a, b)[0]).saturated)
