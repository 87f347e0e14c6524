"""Two dense graphs that trade places.

Delete two edges from K_8.  Removing a star at v4 keeps the most small
connecting sets, so it wins for tiny p.  Removing a matching keeps every
vertex's degree high, so it wins when edges rarely fail.  The sign of the
difference flips exactly once, and the crossing is pinned down exactly.
"""

from fractions import Fraction

from rst_reliability import classify_pair, coeffs, evaluate, family_A, family_Aprime, find_umrg, format_graph

star, matching = family_A(8, 2), family_Aprime(8, 2)
print("star-deleted    :", format_graph(star))
print("matching-deleted:", format_graph(matching))

a, b = coeffs(star), coeffs(matching)
print("\nlow-order coefficients :", a.N[:5], "vs", b.N[:5])
print("high-order coefficients:", a.N[-6:], "vs", b.N[-6:])

v = classify_pair(star, matching)
print(f"\nverdict: {v.relation}; near p=0 favours graph {v.near0.winner} (first gap at N_{v.near0.index}),"
      f" near p=1 favours graph {v.near1.winner} (N_{v.near1.index})")
lo, hi = v.crossings[0]
print(f"crossing isolated to [{float(lo):.12f}, {float(hi):.12f}] (width 2^-{v.width_exp})")

print("\n   p     R(matching) - R(star)")
for k in range(1, 10):
    p = Fraction(k, 10)
    d = evaluate(b, p) - evaluate(a, p)
    bar = "#" * min(40, int(abs(float(d)) * 4e4))
    print(f"  {float(p):.1f}   {float(d):+.3e}  {'-' if d < 0 else '+'}{bar}")

res = find_umrg(8, 26)
print("\nSearch over all of G(8,26): uniformly most reliable graph exists?", res.exists)
