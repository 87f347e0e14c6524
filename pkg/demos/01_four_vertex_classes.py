"""Walk through the smallest interesting class: four vertices, four edges.

Three of the vertices are terminals, so relabelings may only shuffle the
terminals among themselves.  That leaves four distinct graphs, and their
reliability polynomials happen to be totally ordered.
"""

from fractions import Fraction

from rst_reliability import coeffs, enumerate_gnm, evaluate, find_umrg, format_graph

classes = enumerate_gnm(4, 4)
print(f"G(4,4) splits into {len(classes)} classes:\n")
vectors = sorted(((coeffs(g), g) for g in classes), key=lambda t: t[0].N, reverse=True)
for vec, g in vectors:
    print(f"  {format_graph(g):<28} N_2..N_4 = {vec.N}")

print("\nReliability at a few edge probabilities:")
grid = [Fraction(k, 10) for k in range(1, 10)]
print("  p    " + "".join(f"{float(p):>8.1f}" for p in grid))
for vec, g in vectors:
    print(f"  {vec.N!s:<5}" + "".join(f"{float(evaluate(vec, p)):>8.4f}" for p in grid))

best = find_umrg(4, 4)
print(f"\nUniformly most reliable: {format_graph(best.graph)} with N = {best.vector.N}")
print("Each rival is beaten by:", sorted(set(best.certificates.values())))
