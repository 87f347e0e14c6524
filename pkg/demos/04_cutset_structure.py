"""Minimal terminal cutsets of a dense graph and what they say about p near 1.

Near p = 1 the failure probability is dominated by the smallest cutsets, so
the count of those fixes the top coefficients of the polynomial.
"""

import math

from rst_reliability import coeffs, enumerate_minimal_cutsets, family_Aprime, lambda_rst
from rst_reliability.cutsets import lemma34_structure_check

for n in (7, 8):
    G = family_Aprime(n, 2)
    prof = enumerate_minimal_cutsets(G)
    print(f"\nmatching-deleted K_{n}: lambda = {prof.lambda_} (max-flow agrees: {lambda_rst(G)})")
    print("  size  count  example")
    for size, cut in prof.witnesses.items():
        print(f"  {size:>4}  {prof.counts_by_size[size]:>5}  k={cut.k} {list(cut.edges)[:4]}...")
    rep = lemma34_structure_check(G, prof)
    print(f"  smallest cutsets are target stars: {rep.smallest_isolate_one_target}; "
          f"next ones cut off a target plus one vertex: {rep.next_isolate_target_plus_one}")
    vec = coeffs(G)
    lam = prof.lambda_
    print(f"  N_(m-lambda) = {vec[G.m - lam]} = C({G.m},{lam}) - {prof.counts_by_size[lam]} = "
          f"{math.comb(G.m, lam) - prof.counts_by_size[lam]}")
