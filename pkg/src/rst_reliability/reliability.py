"""Exact three-terminal reliability coefficients and their evaluation.

``N_i`` is the number of ``i``-edge subsets of the graph under which r, s and t
lie in one component; the reliability at edge-survival probability ``p`` is
``sum_i N_i p^i (1-p)^(m-i)``.

Two independent exact engines are provided: a subset sweep and a
vertex-subset decomposition.  Both use unbounded Python integers (or int64
arrays whose totals are bounded by ``2^m`` with ``m <= 28``) so no coefficient
can overflow.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import _sweep
from .graph import BudgetExceeded, LabeledGraph, complement_deleted_degrees, count_nontarget_subgraphs, degrees

MAX_BRUTEFORCE_EDGES = 28
MAX_SPLIT_EDGES = 24
MAX_DECOMPOSITION_VERTICES = 16


@dataclass(frozen=True)
class CoeffVector:
    """Coefficients ``N_2..N_m`` (``N_0 = N_1 = 0`` are implicit)."""

    n: int
    m: int
    N: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "N", tuple(int(x) for x in self.N))
        if len(self.N) != max(0, self.m - 1):
            raise ValueError(f"expected {max(0, self.m - 1)} coefficients for m={self.m}, got {len(self.N)}")

    def __getitem__(self, i: int) -> int:
        if i < 0 or i > self.m:
            raise IndexError(i)
        return self.N[i - 2] if i >= 2 else 0

    def full(self) -> list[int]:
        """Coefficients indexed 0..m."""
        return [self[i] for i in range(self.m + 1)]

    @classmethod
    def from_full(cls, n: int, m: int, full) -> CoeffVector:
        full = [int(x) for x in full]
        if any(full[:2]):
            raise ValueError("N_0 and N_1 must vanish for three targets")
        return cls(n, m, tuple(full[2 : m + 1]))

    def check_invariants(self) -> None:
        m = self.m
        for i in range(2, m + 1):
            if not 0 <= self[i] <= math.comb(m, i):
                raise AssertionError(f"N_{i}={self[i]} outside [0, C({m},{i})]")
        for i in range(2, m):
            if (i + 1) * self[i + 1] < (m - i) * self[i]:
                raise AssertionError(f"superset inequality fails at i={i}")
        if m >= 2 and self[m] not in (0, 1):
            raise AssertionError(f"N_m={self[m]} not in {{0, 1}}")
        if m >= 2 and self[m] == 0 and any(self.N):
            raise AssertionError("targets disconnected but some N_i > 0")

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "m": self.m, "N": [str(x) for x in self.N]})

    @classmethod
    def from_json(cls, text: str) -> CoeffVector:
        data = json.loads(text)
        return cls(int(data["n"]), int(data["m"]), tuple(int(x) for x in data["N"]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "N_i"])
        for i, x in enumerate(self.full()):
            writer.writerow([i, x])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, n: int) -> CoeffVector:
        rows = list(csv.reader(io.StringIO(text)))
        if rows[0] != ["i", "N_i"]:
            raise ValueError(f"bad CSV header {rows[0]}")
        if [int(r[0]) for r in rows[1:]] != list(range(len(rows) - 1)):
            raise ValueError("CSV rows must be indexed 0, 1, ..., m")
        values = [int(r[1]) for r in rows[1:]]
        return cls.from_full(n, len(values) - 1, values)


def _require_vector(x) -> CoeffVector:
    if isinstance(x, CoeffVector):
        return x
    if isinstance(x, LabeledGraph):
        return coeffs(x)
    raise TypeError(f"expected CoeffVector or LabeledGraph, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# engines

def coeffs_bruteforce(G: LabeledGraph) -> CoeffVector:
    """Count connecting subsets by sweeping all ``2^m`` edge subsets."""
    m = G.m
    if m > MAX_BRUTEFORCE_EDGES:
        raise BudgetExceeded(f"subset sweep limited to m <= {MAX_BRUTEFORCE_EDGES}, got m={m}")
    counts = np.zeros(m + 1, dtype=np.int64)
    for masks in _sweep.iter_all_masks(m):
        ok = _sweep.connected_masks(G.edges, masks, G.n)
        counts += np.bincount(_sweep.popcount(masks[ok]), minlength=m + 1)
    return CoeffVector.from_full(G.n, m, [int(c) for c in counts])


def _subset_edge_counts(G: LabeledGraph) -> list[int]:
    n = G.n
    adj = G.adjacency_masks()
    e = [0] * (1 << n)
    for U in range(1, 1 << n):
        v = (U & -U).bit_length() - 1
        rest = U & (U - 1)
        e[U] = e[rest] + (adj[v] & rest).bit_count()
    return e


def coeffs_decomposition(G: LabeledGraph) -> CoeffVector:
    """Coefficients from connected-spanning-subgraph counts of vertex subsets.

    For every vertex set W holding the targets, the connecting subsets whose
    target component is exactly W are a connected spanning subgraph of G[W]
    together with any edges lying entirely outside W.  Connected counts come
    from the usual recursion on the piece containing vertex 0.  Polynomials
    are kept in powers of ``y = 1 + x`` so that "any subset of k edges" is
    the monomial ``y^k`` and products become shifts.
    """
    n, m = G.n, G.m
    if n > MAX_DECOMPOSITION_VERTICES:
        raise BudgetExceeded(f"decomposition limited to n <= {MAX_DECOMPOSITION_VERTICES}, got n={n}")
    e = _subset_edge_counts(G)
    full = (1 << n) - 1
    conn: dict[int, list[int]] = {}
    for U in range(1, 1 << n, 2):
        poly = [0] * (e[U] + 1)
        poly[e[U]] = 1
        rest = U ^ 1
        sub = (rest - 1) & rest
        while True:
            if sub != rest:
                inner = conn[sub | 1]
                shift = e[rest ^ sub]
                for k, c in enumerate(inner):
                    if c:
                        poly[k + shift] -= c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        conn[U] = poly
    in_y = [0] * (m + 1)
    for W in range(0b111, 1 << n, 8):
        shift = e[full ^ W]
        for k, c in enumerate(conn[W]):
            if c:
                in_y[k + shift] += c
    full_coeffs = [sum(in_y[k] * math.comb(k, i) for k in range(i, m + 1)) for i in range(m + 1)]
    return CoeffVector.from_full(n, m, full_coeffs)


ENGINES = {
    "bruteforce": coeffs_bruteforce,
    "decomposition": coeffs_decomposition,
}


def coeffs(G: LabeledGraph, engine: str = "auto") -> CoeffVector:
    """Coefficient vector by the named engine; ``auto`` picks the faster exact one."""
    if engine == "auto":
        engine = "decomposition" if G.n <= MAX_DECOMPOSITION_VERTICES else "bruteforce"
    try:
        return ENGINES[engine](G)
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}") from None


# ---------------------------------------------------------------------------
# minimal / non-minimal split

@dataclass(frozen=True)
class MinimalSplit:
    """``b[i]`` minimal and ``c[i]`` non-minimal connecting subsets of size i.

    Both tuples are indexed from i = 2, like ``CoeffVector.N``; ``max_size``
    records a truncated sweep (sizes above it are absent).
    """

    m: int
    b: tuple[int, ...]
    c: tuple[int, ...]
    max_size: int | None = None

    def b_at(self, i: int) -> int:
        return self.b[i - 2]

    def c_at(self, i: int) -> int:
        return self.c[i - 2]

    def N_at(self, i: int) -> int:
        return self.b[i - 2] + self.c[i - 2]


def _minimal_full(G: LabeledGraph) -> MinimalSplit:
    m = G.m
    table = _sweep.connectivity_table(G.edges, G.n)
    b = np.zeros(m + 1, dtype=np.int64)
    tot = np.zeros(m + 1, dtype=np.int64)
    for masks in _sweep.iter_all_masks(m):
        ok = table[masks]
        minimal = ok.copy()
        for k in range(m):
            has = ((masks >> k) & 1).astype(bool)
            minimal &= ~(has & table[masks ^ (1 << k)])
        pc = _sweep.popcount(masks)
        tot += np.bincount(pc[ok], minlength=m + 1)
        b += np.bincount(pc[minimal], minlength=m + 1)
    bb = [int(x) for x in b[2:]]
    cc = [int(t - x) for t, x in zip(tot[2:], b[2:])]
    return MinimalSplit(m, tuple(bb), tuple(cc))


def _minimal_upto(G: LabeledGraph, max_size: int, budget: int) -> MinimalSplit:
    m = G.m
    top = min(max_size, m)
    work = sum(math.comb(m, i) for i in range(2, top + 1))
    if work > budget:
        raise BudgetExceeded(f"{work} subsets of size <= {top}, budget {budget}")
    bb, cc = [], []
    for i in range(2, top + 1):
        combos = np.array(list(itertools.combinations(range(m), i)), dtype=np.int64).reshape(-1, i)
        present = np.zeros((len(combos), m), dtype=bool)
        rows = np.arange(len(combos))
        for j in range(i):
            present[rows, combos[:, j]] = True
        ok = _sweep.connected_rows(G.edges, present, G.n)
        minimal = ok.copy()
        for j in range(i):
            present[rows, combos[:, j]] = False
            minimal &= ~_sweep.connected_rows(G.edges, present, G.n)
            present[rows, combos[:, j]] = True
        bb.append(int(minimal.sum()))
        cc.append(int(ok.sum() - minimal.sum()))
    return MinimalSplit(m, tuple(bb), tuple(cc), max_size=top)


def minimal_split(G: LabeledGraph, max_size: int | None = None, budget: int = 5 * 10**6) -> MinimalSplit:
    """Split every ``N_i`` into minimal and non-minimal connecting subsets.

    A connecting subset is minimal when removing any single edge breaks the
    targets apart (connectivity is closed under adding edges, so this is the
    same as containing no smaller connecting subset).  With ``max_size`` only
    subsets up to that size are examined, which is what makes large dense
    graphs tractable.
    """
    if max_size is None:
        if G.m > MAX_SPLIT_EDGES:
            raise BudgetExceeded(f"full split limited to m <= {MAX_SPLIT_EDGES}; pass max_size")
        return _minimal_full(G)
    return _minimal_upto(G, max_size, budget)


# ---------------------------------------------------------------------------
# closed forms for the dense family with all target edges present

@dataclass(frozen=True)
class N3Decomposition:
    a: int
    b: int
    c: int
    d: int

    @property
    def total(self) -> int:
        return self.a + self.b + self.c + self.d


def n3_decomposition(G: LabeledGraph) -> N3Decomposition:
    """Split the 3-edge connecting subsets of a graph containing triangle rst.

    ``a``: the triangle itself (one set); ``b``: two triangle edges plus any
    other edge; ``c``: one triangle edge xy plus a two-edge path from the
    third target z to x or y through a non-target; ``d``: claws at a
    non-target adjacent to all three targets.
    """
    E = G.edge_set()
    tri = [(0, 1), (0, 2), (1, 2)]
    if not all(e in E for e in tri):
        raise ValueError("graph does not contain the triangle rst")
    a = 1
    b = 3 * (G.m - 3)
    c = d = 0
    for v in range(3, G.n):
        at = [(t, v) in E for t in range(3)]
        for x, y in tri:
            z = 3 - x - y
            if at[z]:
                c += at[x] + at[y]
        d += all(at)
    return N3Decomposition(a, b, c, d)


@dataclass
class FormulaReport:
    rows: dict[str, tuple[int, int]] = field(default_factory=dict)

    def mismatches(self) -> dict[str, tuple[int, int]]:
        return {k: v for k, v in self.rows.items() if v[0] != v[1]}

    def __str__(self):
        lines = [f"{'quantity':<12}{'closed form':>14}{'enumerated':>14}"]
        for name, (f, e) in self.rows.items():
            flag = "" if f == e else "   MISMATCH"
            lines.append(f"{name:<12}{f:>14}{e:>14}{flag}")
        return "\n".join(lines)


def closed_forms(n: int, m: int, deleted_degrees, nontarget_degrees) -> dict[str, int]:
    """Closed forms for b_4, c_4, b_5 (three variants) and c_5."""
    C = math.comb
    inner = m - 3 * n + 6  # edges among non-targets
    l = C(n, 2) - m
    out = {
        "b4": 6 * C(n - 3, 2) + 12 * inner + 6 * inner,
        "c4": 3 * C(m - 3, 2) + (m - 3) + (n - 3) * (m - 3) + 6 * (n - 3) * (m - 6),
        "b5_degree": 12 * inner * (n - 5) + 24 * sum(C(d - 3, 2) for d in nontarget_degrees),
        "b5_square": 12 * sum((d - 3) ** 2 for d in nontarget_degrees) + 12 * inner * (n - 7),
        "b5_deleted": 24 * sum(C(d, 2) for d in deleted_degrees)
        + 24 * l
        + 12 * (n - 3) * (n - 4) ** 2
        - 48 * (n - 4) * l
        + 12 * inner * (n - 7),
        "c5": 3 * C(m - 3, 3)
        + C(m - 3, 2)
        + 7 * (n - 3) * C(m - 6, 2)
        + 3 * (n - 3) * (m - 6)
        - 12 * C(n - 3, 2)
        + 18 * inner * (m - 10)
        + 6 * inner
        + 6 * (m - 9) * C(n - 3, 2),
    }
    return out


def formula_suite(G: LabeledGraph) -> FormulaReport:
    """Closed-form values next to enumerated ones; nothing is asserted here."""
    E = G.edge_set()
    if not all((t, v) in E for t in range(3) for v in range(t + 1, G.n)):
        raise ValueError("formula suite needs triangle rst and every target-to-non-target edge")
    deg = degrees(G)
    forms = closed_forms(G.n, G.m, complement_deleted_degrees(G), deg[3:])
    split = minimal_split(G, max_size=5)
    enumerated = {
        "b4": split.b_at(4),
        "c4": split.c_at(4),
        "b5_degree": split.b_at(5),
        "b5_square": split.b_at(5),
        "b5_deleted": split.b_at(5),
        "c5": split.c_at(5),
    }
    return FormulaReport({k: (forms[k], enumerated[k]) for k in forms})


def n6_gap_formula(G: LabeledGraph, H: LabeledGraph) -> int:
    """``30 dP4 + 6 dK13 - 66 dK3``, pattern counts taken on the non-target part of each graph."""
    diff = {p: count_nontarget_subgraphs(G, p) - count_nontarget_subgraphs(H, p) for p in ("P4", "K13", "K3")}
    return 30 * diff["P4"] + 6 * diff["K13"] - 66 * diff["K3"]


# ---------------------------------------------------------------------------
# evaluation

def _as_fraction(p) -> Fraction:
    if isinstance(p, float):
        return Fraction(p)
    return Fraction(p)


def evaluate(NV, p) -> Fraction:
    """Exact reliability at ``p`` (ints, Fractions, decimal strings or floats)."""
    NV = _require_vector(NV)
    p = _as_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p={p} outside [0, 1]")
    q = 1 - p
    m = NV.m
    return sum((Fraction(NV[i]) * p**i * q ** (m - i) for i in range(2, m + 1)), Fraction(0))


def evaluate_float(NV, p: float) -> float:
    NV = _require_vector(NV)
    m = NV.m
    return float(sum(NV[i] * p**i * (1 - p) ** (m - i) for i in range(2, m + 1)))


# ---------------------------------------------------------------------------
# Monte Carlo

RNG_ALGORITHM = "numpy.random.PCG64"


class MCEstimate(NamedTuple):
    estimate: float
    half_width: float
    samples: int
    seed: int
    rng: str = RNG_ALGORITHM


def mc_estimate(G: LabeledGraph, p: float, samples: int, seed: int, batch: int = 1 << 16) -> MCEstimate:
    """Sampled reliability with a normal-approximation 95% half-width."""
    if samples < 1:
        raise ValueError("need at least one sample")
    if not 0 <= p <= 1:
        raise ValueError(f"p={p} outside [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    hits = 0
    done = 0
    while done < samples:
        size = min(batch, samples - done)
        present = rng.random((size, G.m)) < p
        hits += int(_sweep.connected_rows(G.edges, present, G.n).sum())
        done += size
    est = hits / samples
    half = 1.959963984540054 * math.sqrt(est * (1 - est) / samples)
    return MCEstimate(est, half, samples, seed)
