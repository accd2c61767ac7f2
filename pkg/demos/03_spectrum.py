"""The closed-form spectrum next to what the constructions actually reach.

Run: python3 demos/03_spectrum.py
"""

from k4sat.constructions import (
    bipartite_threshold,
    coverage_set,
    parameters_for_size,
    spectrum_formula,
    verify_coverage_interval,
    verify_overlap_inequality,
)

for n in (10, 11, 12):
    s = spectrum_formula(n)
    print(f"n={n}: {s.sizes}")
    if s.unwitnessed:
        print(f"   listed but below sat(n): {s.unwitnessed}")

# F_n(a, b) with b >= 2 covers every size from 3n - 11 up to the threshold.
n = 12
print("coverage", coverage_set(n).sizes, "threshold", bipartite_threshold(n))
print("interval covered:", verify_coverage_interval(n).ok)
print("overlap inequality holds:", verify_overlap_inequality(n))
for m in (25, 28, 32):
    print(f"  {m} edges from (a, b) =", parameters_for_size(n, m))

# sweep a wider range
bad = [n for n in range(10, 301) if not verify_coverage_interval(n).ok]
print("n in [10, 300] with gaps:", bad)
