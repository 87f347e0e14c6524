import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rst_reliability import compare, families
from rst_reliability.compare import (
    Verdict,
    bernstein_sign,
    classify_pair,
    difference_polynomial,
    find_local_opt,
    find_umrg,
    isolate_sign_changes,
    lemma32_search,
    near0_order,
    near1_order,
    star_plus_isolated,
    triangle_plus_isolated,
)
from rst_reliability.graph import canonical_key, complete_graph, enumerate_gnm, from_complete_minus
from rst_reliability.reliability import CoeffVector, coeffs, evaluate


def test_equal_pair():
    G = families.family_A(7, 2)
    v = classify_pair(G, G)
    assert v.relation == "equal" and v.crossings == []
    assert v.near0.winner == "eq" and v.near0.index is None


def test_domination():
    top = from_complete_minus(5, [(3, 4)])
    v = classify_pair(top, families.family_X(5))
    assert v.relation == "first_dominates"
    assert classify_pair(families.family_X(5), top).relation == "second_dominates"


def test_mismatched_classes_rejected():
    with pytest.raises(ValueError):
        classify_pair(complete_graph(5), complete_graph(6))


@pytest.mark.parametrize("n", [7, 8])
def test_crossing_a_vs_aprime(n):
    a, b = families.family_A(n, 2), families.family_Aprime(n, 2)
    v = classify_pair(a, b)
    assert v.relation == "crossing"
    assert v.near0.winner == 0 and v.near1.winner == 1
    assert len(v.crossings) == 1
    lo, hi = v.crossings[0]
    assert hi - lo <= Fraction(1, 2**40)
    d = lambda p: evaluate(a, p) - evaluate(b, p)  # noqa: E731
    assert d(lo) > 0 > d(hi)


def test_orders_pick_first_difference():
    a = CoeffVector(5, 5, (1, 5, 5, 1))
    b = CoeffVector(5, 5, (1, 4, 6, 1))
    assert near0_order(a, b) == compare.Order(0, 3)
    assert near1_order(a, b) == compare.Order(1, 4)


def test_difference_polynomial_value():
    a, b = families.family_A(7, 2), families.family_Aprime(7, 2)
    poly = difference_polynomial(a, b)
    p = Fraction(3, 10)
    assert sum(c * p**k for k, c in enumerate(poly)) == evaluate(a, p) - evaluate(b, p)


@settings(max_examples=50)
@given(st.integers(0, 2**12))
def test_bernstein_sign_matches_exact(k):
    a, b = coeffs(families.family_A(8, 2)), coeffs(families.family_Aprime(8, 2))
    p = Fraction(k, 2**12)
    d = evaluate(a, p) - evaluate(b, p)
    assert bernstein_sign(a, b, p) == (d > 0) - (d < 0)


def test_isolate_finds_exact_dyadic_root():
    # (p - 1/2) has its root on the grid
    found = isolate_sign_changes([-1, 2], -1, 1)
    assert len(found) == 1
    lo, hi = found[0]
    assert lo <= Fraction(1, 2) <= hi


def test_isolate_two_roots():
    # (4p - 1)(4p - 3) = 16p^2 - 16p + 3
    found = isolate_sign_changes([3, -16, 16], 1, 1)
    assert [(lo <= Fraction(1, 4) <= hi) for lo, hi in found[:1]] == [True]
    assert len(found) == 2 and found[1][0] <= Fraction(3, 4) <= found[1][1]


def test_verdict_round_trip():
    v = classify_pair(families.family_A(7, 2), families.family_Aprime(7, 2))
    assert Verdict.from_dict(v.to_dict()) == v
    assert isinstance(v.to_json(), str)


def test_local_optima_g44():
    opt0 = find_local_opt(4, 4, "zero")
    opt1 = find_local_opt(4, 4, "one")
    assert [coeffs(g).N for g in opt0] == [(3, 4, 1)] == [coeffs(g).N for g in opt1]
    with pytest.raises(ValueError):
        find_local_opt(4, 4, "middle")


def test_umrg_exists_in_g5_8():
    res = find_umrg(5, 8)
    assert res.exists and res.vector.N == (3, 25, 60, 55, 28, 8, 1)
    assert len(res.certificates) == 7


def test_umrg_absent_in_g7_19():
    res = find_umrg(7, 19)
    assert not res.exists
    g, h, v = res.witness
    assert canonical_key(g) == canonical_key(families.family_A(7, 2))
    assert canonical_key(h) == canonical_key(families.family_Aprime(7, 2))
    assert v.relation == "crossing"


def test_find_local_opt_near_one_is_aprime():
    got = find_local_opt(7, 19, "one")
    assert [canonical_key(g) for g in got] == [canonical_key(families.family_Aprime(7, 2))]


@pytest.mark.parametrize("n, m", [(4, 2), (5, 3), (6, 4), (6, 5)])
def test_p3_maximisers_small(n, m):
    res = lemma32_search(n, m)
    want = [star_plus_isolated(n, m)]
    if m == 3:
        want = sorted(want + [triangle_plus_isolated(n)])
    assert sorted(res.classes) == want
    assert res.count == math.comb(m, 2)


def test_p3_search_range():
    with pytest.raises(ValueError):
        lemma32_search(5, 5)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_one_edge_deletion_domination(n):
    rep = compare.theorem41_domination(n)
    assert rep.passed and rep.classes_ok
    assert len(enumerate_gnm(n, math.comb(n, 2) - 1)) == 3
