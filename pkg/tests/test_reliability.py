import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from rst_reliability import families
from rst_reliability.graph import LabeledGraph, complete_graph, enumerate_gnm, from_complete_minus
from rst_reliability.reliability import (
    CoeffVector,
    closed_forms,
    coeffs,
    coeffs_bruteforce,
    coeffs_decomposition,
    evaluate,
    evaluate_float,
    formula_suite,
    mc_estimate,
    minimal_split,
    n3_decomposition,
    n6_gap_formula,
)

TRIANGLE = LabeledGraph(3, ((0, 1), (0, 2), (1, 2)))


def test_triangle():
    vec = coeffs(TRIANGLE)
    assert vec.N == (3, 1)
    p = Fraction(1, 3)
    assert evaluate(vec, p) == p**3 + 3 * p**2 * (1 - p)


def test_star_through_a_hub():
    G = LabeledGraph(4, ((0, 3), (1, 3), (2, 3)))
    assert coeffs(G).N == (0, 1)


def test_disconnected_targets_give_zero():
    G = LabeledGraph(5, ((0, 1), (3, 4)))
    assert coeffs_bruteforce(G).N == (0,)
    assert coeffs_decomposition(G).N == (0,)


def test_z5_top_coefficient():
    vec = coeffs(families.family_Z(5), "bruteforce")
    assert vec[9] == 1 and vec[0] == vec[1] == 0


@settings(max_examples=100)
@given(graphs(max_n=7, max_m=16))
def test_engines_agree(G):
    assert coeffs_bruteforce(G) == coeffs_decomposition(G)


@given(graphs(max_n=9))
def test_coefficient_invariants(G):
    coeffs(G).check_invariants()


def test_dense_engines_agree():
    for G in (complete_graph(6), families.family_A(7, 2), families.family_Aprime(7, 2)):
        assert coeffs_bruteforce(G) == coeffs_decomposition(G)


def test_invariant_checker_catches_bad_vectors():
    with pytest.raises(AssertionError):
        CoeffVector(3, 3, (4, 1)).check_invariants()
    with pytest.raises(AssertionError):
        CoeffVector(4, 4, (3, 0, 1)).check_invariants()


@given(graphs(max_n=7), st.fractions(0, 1), st.fractions(0, 1))
def test_monotone_in_p(G, p, q):
    lo, hi = sorted((p, q))
    vec = coeffs(G)
    assert evaluate(vec, lo) <= evaluate(vec, hi)


def test_evaluate_endpoints_and_errors():
    vec = coeffs(complete_graph(5))
    assert evaluate(vec, 0) == 0 and evaluate(vec, 1) == 1
    assert math.isclose(evaluate_float(vec, 0.3), float(evaluate(vec, Fraction(3, 10))), rel_tol=1e-12)
    with pytest.raises(ValueError):
        evaluate(vec, Fraction(3, 2))


@given(graphs(max_n=7))
def test_json_and_csv_round_trip(G):
    vec = coeffs(G)
    assert CoeffVector.from_json(vec.to_json()) == vec
    assert CoeffVector.from_csv(vec.to_csv(), vec.n) == vec


def test_big_integers_survive_json():
    vec = coeffs(complete_graph(12))
    assert max(vec.N) > 2**53
    assert CoeffVector.from_json(vec.to_json()) == vec


def test_minimal_split_partitions_counts():
    G = families.family_Aprime(7, 2)
    split = minimal_split(G)
    vec = coeffs(G)
    assert all(split.N_at(i) == vec[i] for i in range(2, G.m + 1))
    # size-2 connecting sets are two edges of triangle rst, all minimal
    assert split.b_at(2) == 3 and split.c_at(2) == 0
    truncated = minimal_split(G, max_size=4)
    assert truncated.b == split.b[:3] and truncated.c == split.c[:3]


@pytest.mark.parametrize("G", [families.family_A(7, 2), families.family_Aprime(9, 3), complete_graph(7),
                               families.family_Astar(8), families.family_A(8, 3)])
def test_closed_forms_match_enumeration(G):
    report = formula_suite(G)
    assert not report.mismatches(), str(report)


def test_closed_forms_on_complete_graph():
    forms = closed_forms(7, 21, [0, 0, 0, 0], [6, 6, 6, 6])
    vec = coeffs(complete_graph(7))
    assert forms["b4"] + forms["c4"] == vec[4]


@pytest.mark.parametrize("G", [complete_graph(6), families.family_A(7, 2), families.family_Aprime(8, 2)])
def test_n3_decomposition_total(G):
    assert n3_decomposition(G).total == coeffs(G)[3]


def test_n3_decomposition_needs_triangle():
    with pytest.raises(ValueError):
        n3_decomposition(from_complete_minus(5, [(0, 1)]))


@pytest.mark.parametrize("n", [7, 8, 9])
def test_n6_gap(n):
    a, b = families.family_A(n, 3), families.family_Astar(n)
    va, vb = coeffs(a), coeffs(b)
    assert [va[i] - vb[i] for i in range(2, 6)] == [0, 0, 0, 0]
    assert va[6] - vb[6] == n6_gap_formula(a, b) == -72


def test_mc_reproducible_and_close():
    G = families.family_Z(5)
    a = mc_estimate(G, 0.4, 20_000, seed=11)
    b = mc_estimate(G, 0.4, 20_000, seed=11)
    assert a == b and a.rng == "numpy.random.PCG64"
    exact = float(evaluate(coeffs(G), Fraction(2, 5)))
    assert abs(a.estimate - exact) < 4 * a.half_width


def test_mc_errors():
    with pytest.raises(ValueError):
        mc_estimate(TRIANGLE, 0.5, 0, seed=0)
    with pytest.raises(ValueError):
        mc_estimate(TRIANGLE, 1.5, 10, seed=0)


def _near_zero_sign(a, b):
    for x, y in zip(a.N, b.N):
        if x != y:
            return (x > y) - (x < y)
    return 0


def _near_one_sign(a, b):
    for x, y in zip(a.N[::-1], b.N[::-1]):
        if x != y:
            return (x > y) - (x < y)
    return 0


@settings(max_examples=40)
@given(st.data())
def test_lexicographic_order_decides_near_the_ends(data):
    m = data.draw(st.integers(6, 13))
    classes = enumerate_gnm(6, m)
    g, h = data.draw(st.sampled_from(classes)), data.draw(st.sampled_from(classes))
    a, b = coeffs(g), coeffs(h)
    tiny = Fraction(1, 2**20)
    diff0 = evaluate(a, tiny) - evaluate(b, tiny)
    diff1 = evaluate(a, 1 - tiny) - evaluate(b, 1 - tiny)
    assert (diff0 > 0) - (diff0 < 0) == _near_zero_sign(a, b)
    assert (diff1 > 0) - (diff1 < 0) == _near_one_sign(a, b)
