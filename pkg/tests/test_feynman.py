from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from kolmex.feynman import (
    LambdaSeries,
    Theory,
    TheoryError,
    gaussian_oracle,
    graph_expansion,
    graph_weight,
    invert_matrix,
    theory_from_json,
    theory_to_json,
    wick_pairing_sum,
    wick_pairings_naive,
)
from kolmex.graphs import Graph, GraphError

F = Fraction

TWO_LOOPS = Graph(1, (1, 0, 3, 2), (0, 0, 0, 0))
THETA = Graph(2, (3, 4, 5, 0, 1, 2), (0, 0, 0, 1, 1, 1))
DUMBBELL = Graph(2, (1, 0, 3, 2, 5, 4), (0, 0, 0, 1, 1, 1))


# -- theory construction --------------------------------------------------------

def test_metric_must_be_symmetric_invertible():
    with pytest.raises(TheoryError):
        Theory.build(2, ((1, 2), (3, 4)), {})
    singular = Theory.build(2, ((1, 1), (1, 1)), {})
    with pytest.raises(TheoryError):
        singular.metric_inverse


def test_exact_inverse():
    m = ((F(2), F(1, 2)), (F(1, 2), F(3)))
    inv = invert_matrix(m)
    for i in range(2):
        for j in range(2):
            acc = sum(m[i][k] * inv[k][j] for k in range(2))
            assert acc == (1 if i == j else 0)


def test_tensor_symmetrization():
    t = Theory.build(1, ((1,),), {3: {(0, 0, 0): F(1, 2)}})
    assert t.tensor(3) == {(0, 0, 0): F(1, 2)}
    t2 = Theory.build(2, ((1, 0), (0, 1)), {2: {(1, 0): F(1), (0, 1): F(2)}})
    assert t2.tensor(2) == {(0, 1): F(3)}  # sorted indices merge


# -- weights --------------------------------------------------------------------

def test_weight_single_coloring():
    t = Theory.single_color(c4=F("5/9"))
    assert graph_weight(TWO_LOOPS, t) == F(5, 9)


def test_weight_zero_tensor_kills_graph():
    t = Theory.single_color(c4=F(2))  # no valence-3 tensor
    assert graph_weight(THETA, t) == 0


def test_weight_theta_formula():
    # g^{11} = p, C_3 = c  ->  p^3 c^2
    p, c = F(7, 3), F(2, 5)
    t = Theory.build(1, ((1 / p,),), {3: {(0, 0, 0): c}})
    assert graph_weight(THETA, t) == p**3 * c**2


def test_weight_rejects_tails():
    with_tail = Graph(1, (0,), (0,))
    with pytest.raises(GraphError):
        graph_weight(with_tail, Theory.single_color(c1=F(1)))


def test_weight_isomorphism_invariant():
    t = Theory.build(
        2,
        ((F(1), F(0)), (F(0), F(2))),
        {3: {(0, 0, 0): F(1), (0, 1, 1): F(2)}},
    )
    theta_relabeled = Graph(2, (5, 4, 3, 2, 1, 0), (1, 1, 1, 0, 0, 0))
    assert graph_weight(THETA, t) == graph_weight(theta_relabeled, t)


def test_weight_multiplicative_over_disjoint_union():
    t = Theory.single_color(c3=F(2), c4=F(3))
    for g in [THETA, TWO_LOOPS, DUMBBELL]:
        nf, nv = g.n_flags, g.n_vertices
        double = Graph(
            2 * nv,
            tuple(list(g.involution) + [f + nf for f in g.involution]),
            tuple(list(g.incidence) + [v + nv for v in g.incidence]),
        )
        assert graph_weight(double, t) == graph_weight(g, t) ** 2


# -- expansion ------------------------------------------------------------------

def test_expansion_trivial_theory():
    assert graph_expansion(Theory.single_color(), 3).coeffs == (F(1), 0, 0, 0)


def test_expansion_quartic_order_one():
    c = F(11, 4)
    s = graph_expansion(Theory.single_color(c4=c), 1)
    assert s.coeffs == (F(1), c / 8)


def test_expansion_cubic_order_one():
    c = F(3, 7)
    s = graph_expansion(Theory.single_color(c3=c), 1)
    assert s.coeffs == (F(1), c**2 / 12 + c**2 / 8)  # theta + dumbbell


# -- oracle ---------------------------------------------------------------------

def test_oracle_trivial():
    assert gaussian_oracle(Theory.single_color(), 2).coeffs == (F(1), 0, 0)


def test_oracle_quartic_moment():
    # <phi^4> = 3 pairings: 1 + lambda c/8
    c = F(5)
    s = gaussian_oracle(Theory.single_color(c4=c), 1)
    assert s.coeffs == (F(1), c / 8)


def test_oracle_cubic_moment():
    # <phi^6> = 15 pairings: 1 + lambda 5 c^2 / 24
    c = F(1, 2)
    s = gaussian_oracle(Theory.single_color(c3=c), 1)
    assert s.coeffs == (F(1), 5 * c**2 / 24)


def test_oracle_color_budget():
    big = Theory.build(5, tuple(
        tuple(F(int(i == j)) for j in range(5)) for i in range(5)
    ), {})
    with pytest.raises(TheoryError):
        gaussian_oracle(big, 1)


def test_pairing_dp_matches_naive_enumeration():
    g_inv = ((F(2), F(1, 3)), (F(1, 3), F(5, 7)))
    cases = [
        (0, 0), (2, 0), (1, 1), (2, 2), (4, 0), (3, 1), (4, 2), (0, 6),
    ]
    for counts in cases:
        colors = tuple([0] * counts[0] + [1] * counts[1])
        assert wick_pairing_sum(counts, g_inv, {}) == wick_pairings_naive(
            colors, g_inv
        )


def test_odd_moments_vanish():
    g_inv = ((F(1),),)
    assert wick_pairing_sum((3,), g_inv, {}) == 0
    assert wick_pairings_naive((0, 0, 0), g_inv) == 0


def test_single_color_moments_are_double_factorials():
    g_inv = ((F(1),),)
    expected = {0: 1, 2: 1, 4: 3, 6: 15, 8: 105}
    for m, val in expected.items():
        assert wick_pairing_sum((m,), g_inv, {}) == val


# -- the equivalence theorem at desk scale ---------------------------------------

def test_expansion_equals_oracle_one_color():
    t = Theory.single_color(c3=F(1, 3), c4=F(-5, 2))
    e = graph_expansion(t, 3)
    o = gaussian_oracle(t, 3)
    assert e.coeffs == o.coeffs


def test_expansion_equals_oracle_two_colors():
    t = Theory.build(
        2,
        ((F(2), F(1, 2)), (F(1, 2), F(3))),
        {
            3: {(0, 0, 0): F(1), (0, 0, 1): F(1, 2), (1, 1, 1): F(2)},
            4: {(0, 0, 1, 1): F(1, 3)},
        },
    )
    assert graph_expansion(t, 2).coeffs == gaussian_oracle(t, 2).coeffs


def test_valence_two_theories_with_matching_cap():
    # mass-term style theory: both routes share order window and vertex cap
    t = Theory.single_color(c2=F(1, 2))
    e = graph_expansion(t, 2, max_vertices=4)
    o = gaussian_oracle(t, 2, max_vertices=4)
    assert e.coeffs == o.coeffs
    c = F(1, 2)
    # hand enumeration at cap 1: empty + single loop (aut 2)
    assert graph_expansion(t, 1, max_vertices=1).coeffs[0] == 1 + c / 2
    # cap 2 adds the 2-cycle (aut 4) and the two-loop union (aut 8)
    assert (
        graph_expansion(t, 1, max_vertices=2).coeffs[0]
        == 1 + c / 2 + c**2 / 4 + c**2 / 8
    )


def test_valence_caps_required():
    with pytest.raises(TheoryError):
        gaussian_oracle(Theory.single_color(c2=F(1)), 1)
    with pytest.raises(GraphError):
        graph_expansion(Theory.single_color(c2=F(1)), 1)


# -- series plumbing --------------------------------------------------------------

def test_series_json_round_trip():
    s = LambdaSeries((F(1), F(3, 8), F(-7, 2)))
    assert LambdaSeries.from_json(s.to_json()) == s


def test_matching_order():
    a = LambdaSeries((F(1), F(2), F(3)))
    b = LambdaSeries((F(1), F(2), F(4)))
    assert a.matching_order(b) == 1
    assert a.matching_order(a) == 2


@settings(max_examples=10)
@given(
    st.fractions(min_value=-3, max_value=3, max_denominator=6),
    st.fractions(min_value=-3, max_value=3, max_denominator=6),
)
def test_equivalence_property_small_orders(c3, c4):
    t = Theory.single_color(c3=c3, c4=c4)
    assert graph_expansion(t, 2).coeffs == gaussian_oracle(t, 2).coeffs


def test_theory_json_round_trip():
    t = Theory.build(
        2,
        ((F(2), F(1, 2)), (F(1, 2), F(3))),
        {3: {(0, 1, 1): F(7, 5)}},
    )
    back = theory_from_json(theory_to_json(t))
    assert back == t
