"""Named verification suites: each claim is recomputed and compared with the stated numbers."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import compare, cutsets, families
from .graph import canonical_key, enumerate_gnm, from_complete_minus
from .reliability import coeffs, evaluate

# published coefficient rows N_2..N_m
ROWS_4_4 = {
    "G1": (3, 4, 1),
    "G2": (1, 3, 1),
    "G3": (1, 4, 1),
    "G4": (0, 3, 1),
}

ROWS_5_8 = [
    (3, 25, 60, 55, 28, 8, 1),
    (3, 23, 57, 54, 28, 8, 1),
    (3, 20, 51, 50, 27, 8, 1),
    (3, 20, 56, 54, 28, 8, 1),
    (1, 16, 55, 54, 28, 8, 1),
    (1, 12, 46, 49, 27, 8, 1),
    (1, 13, 51, 53, 28, 8, 1),
    (0, 6, 42, 48, 27, 8, 1),
]

ROWS_6_13 = [
    (3, 52, 337, 1017, 1605, 1689, 1284, 715, 286, 78, 13, 1),
    (3, 47, 304, 955, 1550, 1661, 1276, 714, 286, 78, 13, 1),
    (3, 47, 297, 953, 1552, 1662, 1276, 714, 286, 78, 13, 1),
    (3, 45, 283, 907, 1501, 1634, 1268, 713, 286, 78, 13, 1),
    (3, 42, 259, 849, 1428, 1577, 1240, 705, 285, 78, 13, 1),
    (3, 42, 264, 889, 1494, 1633, 1268, 713, 286, 78, 13, 1),
    (1, 26, 227, 863, 1486, 1632, 1268, 713, 286, 78, 13, 1),
    (1, 22, 188, 761, 1365, 1548, 1232, 704, 285, 78, 13, 1),
    (1, 23, 199, 805, 1432, 1604, 1260, 712, 286, 78, 13, 1),
    (0, 9, 132, 687, 1308, 1520, 1224, 703, 285, 78, 13, 1),
]


@dataclass
class Claim:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass
class SuiteReport:
    suite: str
    claims: list[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def add(self, name: str, passed: bool, **detail) -> None:
        self.claims.append(Claim(name, bool(passed), detail))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "claims": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.claims],
        }

    def lines(self) -> list[str]:
        return [f"[{'PASS' if c.passed else 'FAIL'}] {self.suite}: {c.name}" for c in self.claims]


def grid(points: int = 99) -> list[Fraction]:
    return [Fraction(k, points + 1) for k in range(1, points + 1)]


def _key_hex(G) -> str:
    return canonical_key(G).hex()


def example1() -> SuiteReport:
    rep = SuiteReport("example1")
    classes = enumerate_gnm(4, 4)
    vecs = {g: coeffs(g).N for g in classes}
    rep.add("four classes", len(classes) == 4, count=len(classes))
    rep.add("vector set", set(vecs.values()) == set(ROWS_4_4.values()), vectors=sorted(vecs.values()))
    g1 = from_complete_minus(4, [(0, 3), (2, 3)])
    rep.add("G1 rebuilt from its subgraph listing", coeffs(g1).N == ROWS_4_4["G1"], vector=coeffs(g1).N)
    by_row = {v: g for g, v in vecs.items()}
    chain = [by_row.get(ROWS_4_4[k]) for k in ("G1", "G3", "G2", "G4")]
    ordered = None not in chain and all(
        evaluate(coeffs(a), p) > evaluate(coeffs(b), p) for p in grid() for a, b in zip(chain, chain[1:])
    )
    rep.add("strict order G1 > G3 > G2 > G4 on 99 interior points", ordered)
    umrg = compare.find_umrg(4, 4)
    rep.add("G1 uniformly most reliable", umrg.exists and umrg.vector.N == ROWS_4_4["G1"])
    return rep


def example2() -> SuiteReport:
    rep = SuiteReport("example2")
    h1, h2 = families.family_Aprime(8, 2), families.family_A(8, 2)
    v = compare.classify_pair(h1, h2)
    rep.add("crossing", v.relation == "crossing", verdict=v.to_dict())
    rep.add("H2 ahead near p=0", v.near0.winner == 1, index=v.near0.index)
    rep.add("H1 ahead near p=1", v.near1.winner == 0, index=v.near1.index)
    d01 = evaluate(h1, Fraction(1, 10)) - evaluate(h2, Fraction(1, 10))
    d09 = evaluate(h1, Fraction(9, 10)) - evaluate(h2, Fraction(9, 10))
    rep.add("difference negative at p=0.1", d01 < 0, value=str(d01))
    rep.add("difference positive at p=0.9", d09 > 0, value=str(d09))
    opt0 = compare.find_local_opt(8, 26, "zero")
    opt1 = compare.find_local_opt(8, 26, "one")
    rep.add("H2 unique near-0 optimum", [_key_hex(g) for g in opt0] == [_key_hex(h2)])
    rep.add("H1 unique near-1 optimum", [_key_hex(g) for g in opt1] == [_key_hex(h1)])
    return rep


def _table_suite(name: str, n: int, rows) -> SuiteReport:
    rep = SuiteReport(name)
    m = math.comb(n, 2) - 2
    classes = enumerate_gnm(n, m)
    got = Counter(coeffs(g).N for g in classes)
    rep.add(f"{len(rows)} classes", len(classes) == len(rows), count=len(classes))
    rep.add("vector multiset", got == Counter(rows), missing=[r for r in rows if r not in got],
            unexpected=[r for r in got if r not in rows])
    top = next((g for g in classes if coeffs(g).N == rows[0]), None)
    dominates = top is not None and all(
        compare.classify_pair(top, g).relation == "first_dominates" for g in classes if g != top
    )
    rep.add("top row dominates coefficient-wise", dominates)
    umrg = compare.find_umrg(n, m)
    rep.add("uniformly most reliable is the top row", umrg.exists and umrg.vector.N == rows[0])
    return rep


def table_5_8() -> SuiteReport:
    return _table_suite("appendixA5", 5, ROWS_5_8)


def table_6_13() -> SuiteReport:
    return _table_suite("appendixA6", 6, ROWS_6_13)


T31_CASES = ((7, 2), (7, 3), (8, 2), (8, 3), (8, 4))
T32_CASES = ((7, 2), (8, 2), (9, 2), (9, 3))


def _cases(n, l, default):
    if n is None and l is None:
        return default
    if n is None or l is None:
        raise ValueError("give both n and l, or neither")
    return ((n, l),)


def t31(n: int | None = None, l: int | None = None) -> SuiteReport:
    rep = SuiteReport("t31")
    for n_, l_ in _cases(n, l, T31_CASES):
        want = families.family_Astar(n_) if l_ == 3 else families.family_A(n_, l_)
        got = compare.find_local_opt(n_, math.comb(n_, 2) - l_, "zero")
        ok = [_key_hex(g) for g in got] == [_key_hex(want)]
        frame = all(g.has_edge(t, v) for g in got for t in range(3) for v in range(t + 1, n_))
        rep.add(f"near-0 optimum of G({n_},{math.comb(n_, 2) - l_}) is {'A*' if l_ == 3 else 'A'}", ok,
                found=[repr(g) for g in got])
        rep.add(f"near-0 optimum of G({n_},{math.comb(n_, 2) - l_}) keeps all target edges", frame)
    return rep


def t32(n: int | None = None, l: int | None = None) -> SuiteReport:
    rep = SuiteReport("t32")
    for n_, l_ in _cases(n, l, T32_CASES):
        want = families.family_Aprime(n_, l_)
        got = compare.find_local_opt(n_, math.comb(n_, 2) - l_, "one")
        rep.add(f"near-1 optimum of G({n_},{math.comb(n_, 2) - l_}) is A'", [_key_hex(g) for g in got] == [_key_hex(want)],
                found=[repr(g) for g in got])
    return rep


def t33(n: int | None = None, l: int | None = None) -> SuiteReport:
    rep = SuiteReport("t33")
    for n_, l_ in _cases(n, l, ((7, 2), (8, 2))):
        m = math.comb(n_, 2) - l_
        a = families.family_Astar(n_) if l_ == 3 else families.family_A(n_, l_)
        v = compare.classify_pair(a, families.family_Aprime(n_, l_))
        rep.add(f"A vs A' cross in G({n_},{m})", v.relation == "crossing" and v.near0.winner == 0 and v.near1.winner == 1,
                verdict=v.to_dict())
        res = compare.find_umrg(n_, m)
        rep.add(f"no uniformly most reliable graph in G({n_},{m})", not res.exists,
                witness=res.witness and [repr(res.witness[0]), repr(res.witness[1]), res.witness[2].to_dict()])
    return rep


def t41(n: int | None = None) -> SuiteReport:
    rep = SuiteReport("t41")
    for n_ in (5, 6, 7, 8, 9) if n is None else (n,):
        r = compare.theorem41_domination(n_)
        rep.add(f"Z_{n_} dominates X_{n_} and Y_{n_}", r.passed, strict=r.strict_indices, violations=r.violations,
                classes_ok=r.classes_ok)
    return rep


def l32(n: int | None = None) -> SuiteReport:
    rep = SuiteReport("l32")
    for n_ in range(1, (7 if n is None else n) + 1):
        for m_ in range(n_):
            res = compare.lemma32_search(n_, m_)
            if m_ == 3:
                want = sorted([compare.star_plus_isolated(n_, 3), compare.triangle_plus_isolated(n_)])
                ok = sorted(res.classes) == want
            else:
                ok = res.classes == [compare.star_plus_isolated(n_, m_)]
            rep.add(f"P3 maximisers on {n_} vertices, {m_} edges", ok, count=res.count, classes=len(res.classes))
    return rep


def _aprime_cases(n, l):
    return _cases(n, l, ((7, 2), (8, 2)))


def l33(n: int | None = None, l: int | None = None) -> SuiteReport:
    rep = SuiteReport("l33")
    for n_, l_ in _aprime_cases(n, l):
        for g in enumerate_gnm(n_, math.comb(n_, 2) - l_):
            prof = cutsets.enumerate_minimal_cutsets(g)
            rep.add(f"cutset bounds hold on {g!r}", cutsets.lemma33_bounds_check(g, prof))
    return rep


def l34(n: int | None = None, l: int | None = None) -> SuiteReport:
    rep = SuiteReport("l34")
    for n_, l_ in _aprime_cases(n, l):
        g = families.family_Aprime(n_, l_)
        prof = cutsets.enumerate_minimal_cutsets(g)
        r = cutsets.lemma34_structure_check(g, prof)
        rep.add(f"smallest cutsets of A'({n_},{l_}) are the 3 target stars of size {n_ - 1}",
                r.smallest_isolate_one_target and r.smallest_count == 3 and r.smallest_size == n_ - 1,
                spectrum=prof.counts_by_size)
        rep.add(f"next-smallest cutsets of A'({n_},{l_}) cut off a target plus one vertex",
                r.next_isolate_target_plus_one and r.next_sizes_match_degree, next_size=r.next_size)
        rep.add(f"lambda by max-flow equals n-1 on A'({n_},{l_})", cutsets.lambda_rst(g) == n_ - 1 == prof.lambda_)
    return rep


SUITES = {
    "example1": example1,
    "example2": example2,
    "appendixA5": table_5_8,
    "appendixA6": table_6_13,
    "t31": t31,
    "t32": t32,
    "t33": t33,
    "t41": t41,
    "l32": l32,
    "l33": l33,
    "l34": l34,
}

_TAKES_NL = {"t31", "t32", "t33", "l33", "l34"}
_TAKES_N = {"t41", "l32"}


def run_suite(name: str, n: int | None = None, l: int | None = None) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    if name in _TAKES_NL:
        return fn(n, l)
    if name in _TAKES_N:
        return fn(n)
    return fn()
