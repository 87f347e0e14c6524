"""Comparing reliability polynomials and exhaustive optimum searches.

Near ``p = 0`` two graphs are ordered by the first coefficient where they
differ (ascending index), near ``p = 1`` by the last one (substitute
``q = 1 - p``).  Everything that decides a sign is done in exact integer or
rational arithmetic.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .graph import (
    BudgetExceeded,
    LabeledGraph,
    canonical_key,
    gnm_classes,
    plain_canonical_edges,
    plain_canonical_key,
)
from .reliability import CoeffVector, coeffs

DEFAULT_GRID_EXP = 10
DEFAULT_WIDTH_EXP = 40
_MAX_HALVINGS = 4096


@dataclass(frozen=True)
class Order:
    """``winner`` is 0 (first), 1 (second) or ``"eq"``; ``index`` is the deciding ``i``."""

    winner: int | str
    index: int | None

    def to_dict(self) -> dict:
        return {"winner": self.winner, "index": self.index}


def _vec(x, engine: str = "auto") -> CoeffVector:
    if isinstance(x, CoeffVector):
        return x
    if isinstance(x, LabeledGraph):
        return coeffs(x, engine)
    raise TypeError(f"expected CoeffVector or LabeledGraph, got {type(x).__name__}")


def _pair(G, H) -> tuple[CoeffVector, CoeffVector]:
    a, b = _vec(G), _vec(H)
    if (a.n, a.m) != (b.n, b.m):
        raise ValueError(f"graphs come from different classes: (n,m)=({a.n},{a.m}) vs ({b.n},{b.m})")
    return a, b


def _order(a: CoeffVector, b: CoeffVector, indices) -> Order:
    for i in indices:
        if a[i] != b[i]:
            return Order(0 if a[i] > b[i] else 1, i)
    return Order("eq", None)


def near0_order(G, H) -> Order:
    a, b = _pair(G, H)
    return _order(a, b, range(2, a.m + 1))


def near1_order(G, H) -> Order:
    a, b = _pair(G, H)
    return _order(a, b, range(a.m, 1, -1))


# ---------------------------------------------------------------------------
# the difference polynomial

def difference_polynomial(G, H) -> list[int]:
    """Standard-basis coefficients of ``R(G;p) - R(H;p)``, index = power of p."""
    a, b = _pair(G, H)
    m = a.m
    out = [0] * (m + 1)
    for i in range(2, m + 1):
        delta = a[i] - b[i]
        if not delta:
            continue
        # p^i (1-p)^(m-i) = sum_j C(m-i, j) (-1)^j p^(i+j)
        for j in range(m - i + 1):
            out[i + j] += delta * math.comb(m - i, j) * (-1) ** j
    return out


def _sign_at(coeffs_std: list[int], p: Fraction) -> int:
    num, den = p.numerator, p.denominator
    deg = len(coeffs_std) - 1
    total = 0
    pw_num, pw_den = 1, den**deg
    for k in range(deg + 1):
        if coeffs_std[k]:
            total += coeffs_std[k] * pw_num * pw_den
        pw_num *= num
        pw_den //= den
    return (total > 0) - (total < 0)


def bernstein_sign(a: CoeffVector, b: CoeffVector, p: Fraction) -> int:
    """Sign of ``R(a;p) - R(b;p)`` straight from the coefficient form."""
    num, den = p.numerator, p.denominator
    m = a.m
    total = sum((a[i] - b[i]) * num**i * (den - num) ** (m - i) for i in range(2, m + 1))
    return (total > 0) - (total < 0)


def _bisect(poly, lo: Fraction, hi: Fraction, s_lo: int, width: Fraction):
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = _sign_at(poly, mid)
        if s == 0:
            # exact dyadic root: step off it until both neighbours are nonzero
            delta = width / 4
            while True:
                sl, sr = _sign_at(poly, mid - delta), _sign_at(poly, mid + delta)
                if sl and sr:
                    break
                delta /= 2
            if sl != sr:
                return mid - delta, mid + delta
            if sl == s_lo:
                lo = mid + delta
            else:
                hi = mid - delta
            continue
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def isolate_sign_changes(poly: list[int], near0: int, near1: int, grid_exp: int = DEFAULT_GRID_EXP,
                         width_exp: int = DEFAULT_WIDTH_EXP) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals in (0, 1) across which ``poly`` changes sign.

    ``near0``/``near1`` are the known signs next to the endpoints.  A dyadic
    grid of step ``2^-grid_exp`` is scanned, extended towards 0 and 1 by
    halving until the endpoint signs are met, and each change is bisected to
    width ``2^-width_exp``.  Two roots inside one grid cell, or a root of even
    multiplicity, produce no sign change and are not reported.
    """
    if not any(poly):
        return []
    step = Fraction(1, 2**grid_exp)
    points = [k * step for k in range(1, 2**grid_exp)]
    left = points[0]
    for _ in range(_MAX_HALVINGS):
        if _sign_at(poly, left) == near0:
            break
        left /= 2
    else:
        raise RuntimeError("could not reach the near-0 sign")
    right = 1 - points[0]
    for _ in range(_MAX_HALVINGS):
        if _sign_at(poly, right) == near1:
            break
        right = (1 + right) / 2
    else:
        raise RuntimeError("could not reach the near-1 sign")
    pts = sorted(set([left] + points + [right]))
    width = Fraction(1, 2**width_exp)
    out = []
    prev_p, prev_s = None, 0
    for p in pts:
        s = _sign_at(poly, p)
        if s == 0:
            continue
        if prev_s and s != prev_s:
            out.append(_bisect(poly, prev_p, p, prev_s, width))
        prev_p, prev_s = p, s
    return out


def _sign_of(order: Order) -> int:
    return {0: 1, 1: -1}.get(order.winner, 0)


@dataclass
class Verdict:
    near0: Order
    near1: Order
    relation: str
    crossings: list[tuple[Fraction, Fraction]] = field(default_factory=list)
    grid_exp: int = DEFAULT_GRID_EXP
    width_exp: int = DEFAULT_WIDTH_EXP

    def to_dict(self) -> dict:
        return {
            "near0": self.near0.to_dict(),
            "near1": self.near1.to_dict(),
            "relation": self.relation,
            "crossings": [[f"{a.numerator}/{a.denominator}", f"{b.numerator}/{b.denominator}"] for a, b in self.crossings],
            "grid_exp": self.grid_exp,
            "width_exp": self.width_exp,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> Verdict:
        return cls(
            Order(d["near0"]["winner"], d["near0"]["index"]),
            Order(d["near1"]["winner"], d["near1"]["index"]),
            d["relation"],
            [(Fraction(a), Fraction(b)) for a, b in d["crossings"]],
            d.get("grid_exp", DEFAULT_GRID_EXP),
            d.get("width_exp", DEFAULT_WIDTH_EXP),
        )


def classify_pair(G, H, grid_exp: int = DEFAULT_GRID_EXP, width_exp: int = DEFAULT_WIDTH_EXP) -> Verdict:
    """Domination, crossing or incomparability of two graphs of the same G(n, m)."""
    a, b = _pair(G, H)
    n0, n1 = near0_order(a, b), near1_order(a, b)
    deltas = [a[i] - b[i] for i in range(2, a.m + 1)]
    if not any(deltas):
        return Verdict(n0, n1, "equal", [], grid_exp, width_exp)
    if all(d >= 0 for d in deltas):
        return Verdict(n0, n1, "first_dominates", [], grid_exp, width_exp)
    if all(d <= 0 for d in deltas):
        return Verdict(n0, n1, "second_dominates", [], grid_exp, width_exp)
    poly = difference_polynomial(a, b)
    found = isolate_sign_changes(poly, _sign_of(n0), _sign_of(n1), grid_exp, width_exp)
    return Verdict(n0, n1, "crossing" if found else "no_crossing_incomparable", found, grid_exp, width_exp)


# ---------------------------------------------------------------------------
# searches over G(n, m)

@dataclass(frozen=True)
class ScoredClass:
    graph: LabeledGraph
    key: bytes
    vector: CoeffVector


def scored_classes(n: int, m: int, engine: str = "auto", budget: int | None = None) -> list[ScoredClass]:
    kwargs = {} if budget is None else {"budget": budget}
    return [ScoredClass(c.graph, c.key, coeffs(c.graph, engine)) for c in gnm_classes(n, m, **kwargs)]


def _rank(vec: CoeffVector, end: str) -> tuple[int, ...]:
    if end == "zero":
        return vec.N
    if end == "one":
        return vec.N[::-1]
    raise ValueError(f"end must be 'zero' or 'one', got {end!r}")


def _maximizers(scored: list[ScoredClass], end: str) -> list[ScoredClass]:
    best = max(_rank(s.vector, end) for s in scored)
    return sorted((s for s in scored if _rank(s.vector, end) == best), key=lambda s: s.key)


def find_local_opt(n: int, m: int, end: str, engine: str = "auto", budget: int | None = None) -> list[LabeledGraph]:
    """All classes that are most reliable for p near 0 (``end="zero"``) or near 1 (``"one"``)."""
    if end not in ("zero", "one"):
        raise ValueError(f"end must be 'zero' or 'one', got {end!r}")
    return [s.graph for s in _maximizers(scored_classes(n, m, engine, budget), end)]


@dataclass
class UMRGResult:
    graph: LabeledGraph | None
    vector: CoeffVector | None
    certificates: dict[bytes, str] = field(default_factory=dict)
    witness: tuple[LabeledGraph, LabeledGraph, Verdict] | None = None

    @property
    def exists(self) -> bool:
        return self.graph is not None


def _weakly_beats(v: Verdict) -> str | None:
    if v.relation in ("first_dominates", "equal"):
        return v.relation
    if v.relation == "no_crossing_incomparable" and v.near0.winner == 0 and v.near1.winner == 0:
        return "no_sign_change"
    return None


def find_umrg(n: int, m: int, engine: str = "auto", budget: int | None = None) -> UMRGResult:
    """A class beating every other on all of [0, 1], or a crossing pair showing none exists.

    Any such graph must be optimal at both ends, so only classes that are
    maximal near 0 and near 1 are tried.  Each opponent gets a certificate:
    coefficient domination, equality, or an exact sign analysis showing the
    difference never changes sign.
    """
    scored = scored_classes(n, m, engine, budget)
    low = _maximizers(scored, "zero")
    high = _maximizers(scored, "one")
    high_keys = {s.key for s in high}
    for cand in low:
        if cand.key not in high_keys:
            continue
        certs = {}
        for other in scored:
            if other.key == cand.key:
                continue
            verdict = classify_pair(cand.vector, other.vector)
            reason = _weakly_beats(verdict)
            if reason is None:
                break
            certs[other.key] = reason
        else:
            return UMRGResult(cand.graph, cand.vector, certs)
    g0, g1 = low[0], high[0]
    if g0.key == g1.key:
        # optimal at both ends but beaten somewhere inside; report the first loss
        for other in scored:
            verdict = classify_pair(g0.vector, other.vector)
            if other.key != g0.key and _weakly_beats(verdict) is None:
                return UMRGResult(None, None, witness=(g0.graph, other.graph, verdict))
    return UMRGResult(None, None, witness=(g0.graph, g1.graph, classify_pair(g0.vector, g1.vector)))


# ---------------------------------------------------------------------------
# P3 maximisers among ordinary graphs

@dataclass
class P3Maximizers:
    n: int
    m: int
    count: int
    classes: list[tuple[tuple[int, int], ...]]


def lemma32_search(n: int, m: int) -> P3Maximizers:
    """Graphs on ``n`` vertices with ``m <= n-1`` edges maximising the number of P3 copies.

    Exhaustive over all labelled graphs; maximisers are returned as canonical
    edge lists, one per isomorphism class.
    """
    if not (1 <= n <= 8 and 0 <= m <= n - 1):
        raise ValueError(f"need 1 <= n <= 8 and 0 <= m <= n-1, got n={n}, m={m}")
    edges = list(itertools.combinations(range(n), 2))
    if m == 0:
        return P3Maximizers(n, m, 0, [()])
    combos = np.array(list(itertools.combinations(range(len(edges)), m)), dtype=np.int64)
    ends = np.array(edges, dtype=np.int64)
    deg = np.zeros((len(combos), n), dtype=np.int64)
    rows = np.arange(len(combos))
    for j in range(m):
        np.add.at(deg, (rows, ends[combos[:, j], 0]), 1)
        np.add.at(deg, (rows, ends[combos[:, j], 1]), 1)
    p3 = (deg * (deg - 1) // 2).sum(axis=1)
    best = int(p3.max())
    classes = {}
    for row in np.flatnonzero(p3 == best):
        es = [edges[i] for i in combos[row]]
        key = plain_canonical_key(n, es)
        if key not in classes:
            classes[key] = plain_canonical_edges(n, es)
    return P3Maximizers(n, m, best, [classes[k] for k in sorted(classes)])


def star_plus_isolated(n: int, m: int) -> tuple[tuple[int, int], ...]:
    return plain_canonical_edges(n, [(0, j) for j in range(1, m + 1)])


def triangle_plus_isolated(n: int) -> tuple[tuple[int, int], ...]:
    return plain_canonical_edges(n, [(0, 1), (0, 2), (1, 2)])


# ---------------------------------------------------------------------------
# one deleted edge

@dataclass
class DominationReport:
    n: int
    passed: bool
    classes_ok: bool
    vectors: dict[str, CoeffVector]
    strict_indices: dict[str, list[int]]
    violations: dict[str, list[int]]


def theorem41_domination(n: int, engine: str = "decomposition") -> DominationReport:
    """Check that K_n minus a non-target edge dominates the other two one-edge deletions."""
    from .families import family_X, family_Y, family_Z

    if not 5 <= n <= 9:
        raise ValueError(f"domination check supported for 5 <= n <= 9, got n={n}")
    graphs = {"X": family_X(n), "Y": family_Y(n), "Z": family_Z(n)}
    keys = {canonical_key(g) for g in graphs.values()}
    enumerated = {c.key for c in gnm_classes(n, math.comb(n, 2) - 1)}
    classes_ok = len(keys) == 3 and keys == enumerated
    vecs = {k: coeffs(g, engine) for k, g in graphs.items()}
    z = vecs["Z"]
    strict, bad = {}, {}
    for name in ("X", "Y"):
        o = vecs[name]
        strict[name] = [i for i in range(2, z.m + 1) if z[i] > o[i]]
        bad[name] = [i for i in range(2, z.m + 1) if z[i] < o[i]]
    passed = classes_ok and all(strict.values()) and not any(bad.values())
    return DominationReport(n, passed, classes_ok, vecs, strict, bad)


__all__ = [
    "BudgetExceeded",
    "DominationReport",
    "Order",
    "P3Maximizers",
    "ScoredClass",
    "UMRGResult",
    "Verdict",
    "bernstein_sign",
    "classify_pair",
    "difference_polynomial",
    "find_local_opt",
    "find_umrg",
    "isolate_sign_changes",
    "lemma32_search",
    "near0_order",
    "near1_order",
    "scored_classes",
    "star_plus_isolated",
    "theorem41_domination",
    "triangle_plus_isolated",
]
