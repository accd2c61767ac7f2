"""Exhaustive census of saturated graphs on up to 8 vertices.

The search assigns vertex pairs column by column and cuts any branch
that already holds a diamond. At n = 6 it turns up the triangular prism,
which is non-bipartite and one edge above the bipartite threshold.

Run: python3 demos/04_enumeration.py
"""

import time

from k4sat.constructions import bipartite_threshold
from k4sat.enumeration import enumerate_saturated, verify_bipartite_threshold
from k4sat.graph import graph6_decode, is_bipartite, shortest_odd_cycle

for n in range(4, 9):
    t = time.perf_counter()
    report = enumerate_saturated(n, cert_cap=3)
    counts = {m: report.sizes[m].unlabeled_count for m in sorted(report.sizes)}
    print(f"n={n} ({time.perf_counter() - t:.1f}s) sizes -> classes: {counts}")
    print(f"    visited {report.stats['visited']}, pruned {report.stats['pruned']}")

print()
for n in range(4, 9):
    check = verify_bipartite_threshold(n)
    print(f"n={n}: threshold {bipartite_threshold(n)}, non-bipartite graphs above it: {check.counterexamples}")

prism = graph6_decode("ELv_")
print()
print("prism edges:", prism.edges())
print("bipartite:", is_bipartite(prism).is_bipartite, " shortest odd cycle:", shortest_odd_cycle(prism).cycle)
