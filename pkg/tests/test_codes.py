import math
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from kolmex import codes
from kolmex.codes import (
    Alphabet,
    Code,
    CodeError,
    bound_curve,
    code_params,
    enumerate_linear_codes,
    hamming_distance,
    partition_sum,
    q_entropy,
    reed_solomon,
    reed_solomon_min_distance,
    sample_codes,
)

F = Fraction


# -- Hamming distance ---------------------------------------------------------

def test_distance_examples():
    assert hamming_distance("000", "000") == 0
    assert hamming_distance("abc", "abd") == 1
    assert hamming_distance("01010", "10101") == 5


def test_distance_rejects_length_mismatch():
    with pytest.raises(CodeError):
        hamming_distance("ab", "abc")


words = st.lists(st.integers(0, 3), min_size=1, max_size=12)


@given(words, words, words)
def test_distance_is_a_metric(a, b, c):
    n = min(len(a), len(b), len(c))
    a, b, c = tuple(a[:n]), tuple(b[:n]), tuple(c[:n])
    assert hamming_distance(a, b) == hamming_distance(b, a)
    assert (hamming_distance(a, b) == 0) == (a == b)
    assert hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c)


# -- parameters ---------------------------------------------------------------

def test_params_repetition_code():
    c = Code(Alphabet(2), 3, frozenset({(0, 0, 0), (1, 1, 1)}))
    p = code_params(c)
    assert (p.n, p.k, p.d) == (3, 1, 3)
    assert (p.rate, p.delta) == (F(1, 3), F(1))


def test_params_full_binary_line():
    p = code_params(Code(Alphabet(2), 1, frozenset({(0,), (1,)})))
    assert (p.n, p.k, p.d, p.rate, p.delta) == (1, 1, 1, F(1), F(1))


def test_params_reed_solomon_brute_force():
    rs = reed_solomon(7, 7, 3)
    assert rs.card() == 343
    p = code_params(rs)
    assert p.d == 5 and (p.rate, p.delta) == (F(3, 7), F(5, 7))
    # independent pairwise oracle over all 343*342/2 pairs
    ws = rs.sorted_words()
    assert min(
        hamming_distance(a, b) for i, a in enumerate(ws) for b in ws[i + 1 :]
    ) == 5


def test_singleton_code_rejected():
    with pytest.raises(CodeError):
        Code(Alphabet(2), 2, frozenset({(0, 0)}))


def test_floor_log_convention():
    # non-power sizes: k = floor(log_q card)
    words = {(0, 0), (0, 1), (1, 0)}
    p = code_params(Code(Alphabet(2), 2, frozenset(words)))
    assert p.k == 1  # card 3, floor(log2 3) = 1


def test_linear_weight_path_agrees_with_pairwise():
    for q, n, k in [(3, 3, 2), (5, 4, 2), (5, 5, 3), (7, 5, 2)]:
        rs = reed_solomon(q, n, k)
        p = code_params(rs)  # generator present: min-weight path
        ws = rs.sorted_words()
        pairwise = min(
            hamming_distance(a, b) for i, a in enumerate(ws) for b in ws[i + 1 :]
        )
        assert p.d == pairwise == n + 1 - k


def test_weight_path_agrees_on_all_small_linear_codes():
    # non-MDS coverage: every linear code from the RREF enumeration
    for q, n in [(2, 4), (3, 3)]:
        for entry in enumerate_linear_codes(q, n).entries:
            ws = entry.code.sorted_words()
            pairwise = min(
                hamming_distance(a, b)
                for i, a in enumerate(ws)
                for b in ws[i + 1 :]
            )
            assert entry.params.d == pairwise


# -- entropy and bound curves -------------------------------------------------

def test_entropy_conventions():
    assert q_entropy(2, 0.0) == 0.0
    assert abs(q_entropy(2, 0.5) - 1.0) < 1e-15
    assert abs(q_entropy(2, 0.25) - 0.8112781244591328) < 1e-13


def test_entropy_oracle_direct_formula():
    # independent evaluation of the defining formula
    for q, d in [(2, 0.3), (3, 0.5), (7, 0.1), (5, 0.9)]:
        expected = (
            d * math.log(q - 1, q) - d * math.log(d, q) - (1 - d) * math.log(1 - d, q)
        )
        assert abs(q_entropy(q, d) - expected) < 1e-14


def test_entropy_domain():
    with pytest.raises(CodeError):
        q_entropy(2, -0.1)
    with pytest.raises(CodeError):
        q_entropy(2, 1.1)


def test_bound_curves():
    assert bound_curve("singleton", 2, 0.3) == pytest.approx(0.7)
    assert bound_curve("gilbert_varshamov", 2, 0.5) == 0.0
    assert bound_curve("hamming", 2, 0.5) == pytest.approx(1 - q_entropy(2, 0.25))
    assert bound_curve("hamming", 2, 1.0) == 0.0  # clamped at 0
    with pytest.raises(CodeError):
        bound_curve("elias", 2, 0.5)


# -- Reed-Solomon -------------------------------------------------------------

def test_rs_full_space_and_constants():
    full = reed_solomon(5, 5, 5)
    assert full.card() == 5**5
    assert code_params(full).d == 1
    const = reed_solomon(5, 5, 1)
    assert const.card() == 5
    assert code_params(const).d == 5


def test_rs_meets_singleton_with_equality():
    for q in (5, 7):
        for n in range(2, q + 1):
            for k in range(1, min(n, 4) + 1):
                d = reed_solomon_min_distance(q, n, k)
                assert d == n + 1 - k
                assert F(k, n) + F(d, n) == 1 + F(1, n)


def test_rs_rejects_bad_parameters():
    with pytest.raises(ValueError):
        reed_solomon(5, 6, 2)  # n > q
    with pytest.raises(ValueError):
        reed_solomon(5, 3, 4)  # k > n
    with pytest.raises(ValueError):
        reed_solomon(5, 3, 2, points=[0, 0, 1])


# -- enumeration --------------------------------------------------------------

def test_enumerate_q2_n2():
    e = enumerate_linear_codes(2, 2)
    assert len(e) == 4
    dims = sorted(entry.params.k for entry in e.entries)
    assert dims == [1, 1, 1, 2]


def test_enumerate_dim1_q2_n3():
    assert len(enumerate_linear_codes(2, 3, dims=[1])) == 7


def test_enumerate_q3_n1():
    assert len(enumerate_linear_codes(3, 1)) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_gaussian_binomials(n):
    def gaussian(n, k, q=2):
        num = den = 1
        for i in range(k):
            num *= q**n - q**i
            den *= q**k - q**i
        return num // den

    expected = sum(gaussian(n, k) for k in range(1, n + 1))
    assert len(enumerate_linear_codes(2, n)) == expected


def test_enumeration_budget():
    with pytest.raises(codes.BudgetError):
        enumerate_linear_codes(2, 6, budget=10)


def test_enumeration_over_pinned_prime_power():
    e = enumerate_linear_codes(4, 2, dims=[1])
    assert len(e) == 5  # (4^2 - 1) / (4 - 1) lines
    for entry in e.entries:
        assert entry.params.k == 1


def test_enumeration_rejects_unsupported_q():
    from kolmex.fields import FieldError

    with pytest.raises(FieldError):
        enumerate_linear_codes(6, 2)


# -- sampling -----------------------------------------------------------------

def test_sample_empty():
    assert len(sample_codes(2, 4, 4, 0, seed=1)) == 0


def test_sample_deterministic():
    a = sample_codes(2, 10, 16, 25, seed=7)
    b = sample_codes(2, 10, 16, 25, seed=7)
    assert codes.cloud_rows(a) == codes.cloud_rows(b)
    assert a.provenance == b.provenance


def test_sample_rejects_oversize():
    with pytest.raises(CodeError):
        sample_codes(2, 2, 5, 1, seed=1)


def test_sampled_codes_satisfy_singleton_exactly():
    ensemble = sample_codes(3, 6, 9, 40, seed=11)
    for entry in ensemble.entries:
        p = entry.params
        assert p.rate + p.delta <= 1 + F(1, p.n)
        assert entry.complexity >= 2


def test_ensemble_sorted_by_complexity():
    ensemble = sample_codes(2, 8, 8, 30, seed=2)
    keys = [
        (e.complexity, e.code.canonical_string()) for e in ensemble.entries
    ]
    assert keys == sorted(keys)


# -- partition sum ------------------------------------------------------------

def _one_code_ensemble(delta_num, n=4):
    # distance delta_num on block length n with exactly two words
    word = tuple([1] * delta_num + [0] * (n - delta_num))
    c = Code(Alphabet(2), n, frozenset({(0,) * n, word}))
    return codes.CodeEnsemble.build([c], {"kind": "fixture"})


def test_partition_single_term_formula():
    ensemble = _one_code_ensemble(3, 4)
    entry = ensemble.entries[0]
    beta = 0.75
    delta = float(entry.params.delta)
    expected = float(entry.complexity) ** (-beta + delta - 1.0)
    z, terms = partition_sum(ensemble, entry.params.rate, F(0), beta, eta=0.0)
    assert terms == 1
    assert z == pytest.approx(expected, rel=1e-12)


def test_partition_empty_selection():
    ensemble = _one_code_ensemble(3, 4)
    z, terms = partition_sum(ensemble, F(9, 10), F(0), 1.0, eta=0.0)
    assert (z, terms) == (0.0, 0)


def test_partition_monotone_in_beta_and_delta():
    ensemble = sample_codes(2, 6, 4, 60, seed=5)
    rate = F(2, 6)
    betas = [0.0, 0.1, 0.5, 1.0, 2.0]
    zs = [partition_sum(ensemble, rate, F(1, 6), b, eta=0.02)[0] for b in betas]
    for lo, hi in zip(zs, zs[1:]):
        assert hi <= lo * (1 + 1e-12)
    deltas = [F(0), F(1, 6), F(2, 6), F(3, 6), F(1)]
    zs = [partition_sum(ensemble, rate, d, 0.3, eta=0.02)[0] for d in deltas]
    for lo, hi in zip(zs, zs[1:]):
        assert hi <= lo * (1 + 1e-12)


def test_partition_rejects_negative_eta():
    with pytest.raises(CodeError):
        partition_sum(_one_code_ensemble(2), F(1, 2), F(0), 1.0, eta=-1)


# -- CSV schemas --------------------------------------------------------------

def test_cloud_schema_columns():
    ensemble = sample_codes(2, 5, 4, 3, seed=9)
    rows = codes.cloud_rows(ensemble)
    assert rows[0] == "q,n,size,k,d,R,delta,K_bits"
    first = rows[1].split(",")
    assert len(first) == 8
    assert first[0] == "2" and first[1] == "5" and first[2] == "4"


def test_sweep_schema_columns():
    ensemble = sample_codes(2, 5, 4, 3, seed=9)
    rows = codes.sweep_rows(ensemble, F(2, 5), F(1, 5), [0.0, 1.0])
    assert rows[0] == "R,Delta,beta,Z,terms"
    assert len(rows) == 3
    assert all(len(r.split(",")) == 5 for r in rows[1:])
