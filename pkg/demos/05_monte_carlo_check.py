"""Compare sampled estimates with the exact polynomial.

The sampler is seeded, so rerunning prints identical numbers.  The interval
is a 95% one, so roughly one row in twenty is expected to miss.
"""

from fractions import Fraction

from rst_reliability import coeffs, evaluate, family_Z, mc_estimate

G = family_Z(6)
vec = coeffs(G)
print(f"K_6 minus a non-terminal edge, {G.m} edges\n")
print("   p      exact       estimate    half-width  inside")
for k in range(1, 10):
    p = Fraction(k, 10)
    exact = float(evaluate(vec, p))
    est = mc_estimate(G, float(p), 100_000, seed=k)
    inside = abs(est.estimate - exact) <= est.half_width
    print(f"  {float(p):.1f}  {exact:.6f}  {est.estimate:.6f}  {est.half_width:.6f}  {inside}")
print(f"\ngenerator: {est.rng}")
