"""Build F_n(a, b) and the two extremal families, then count edges.

Run: python3 demos/01_constructions.py
"""

from k4sat.constructions import (
    construct_complete_bipartite,
    construct_f,
    construct_star_matching,
    ex_number,
    f_formula,
    sat_number,
)
from k4sat.graph import graph6_encode, shortest_odd_cycle

# The family has six parts; I is a single apex vertex joined to A1, B1 and C.
G, parts = construct_f(12, 3, 2)
print("F_12(3, 2):", G)
for name, members in parts.to_dict().items():
    print(f"  {name:>2}: {members}")

# edge count against the closed form
print("edges", G.num_edges, "formula", f_formula(12, 3, 2))

# Exactly two triangles, both through the apex. That is what makes it non-bipartite.
odd = shortest_odd_cycle(G)
print("shortest odd cycle", odd.cycle, "length", odd.length)

# Smallest and largest saturated graphs
n = 10
star = construct_star_matching(n)
kb = construct_complete_bipartite(n, n // 2)
print(f"n={n}: star+matching has {star.num_edges} edges (sat = {sat_number(n)})")
print(f"n={n}: K_(5,5) has {kb.num_edges} edges (ex = {ex_number(n)})")
print("graph6 of K_(5,5):", graph6_encode(kb).decode())
