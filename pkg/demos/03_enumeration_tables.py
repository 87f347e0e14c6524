"""Reproduce full coefficient tables by exhaustive enumeration.

Both exact engines run on every class so the tables are confirmed twice.
"""

from rst_reliability import enumerate_gnm, find_umrg, format_graph
from rst_reliability.reliability import coeffs_bruteforce, coeffs_decomposition

for n, m in ((5, 8), (6, 13)):
    classes = enumerate_gnm(n, m)
    print(f"\nG({n},{m}): {len(classes)} classes")
    rows = []
    for g in classes:
        slow, fast = coeffs_bruteforce(g), coeffs_decomposition(g)
        assert slow == fast
        rows.append((fast.N, g))
    for vec, g in sorted(rows, key=lambda r: r[0], reverse=True):
        print(f"  {format_graph(g):<26} {' '.join(f'{x:>5}' for x in vec)}")
    best = find_umrg(n, m)
    print(f"  uniformly most reliable: {format_graph(best.graph)}")
