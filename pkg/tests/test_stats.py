"""Series-backed statistic tables against oracles and closed forms."""

from fractions import Fraction

import pytest

from partitionlab import enumeration, stats
from partitionlab.series import TruncatedSeries, partition_gf
from partitionlab.stats import (
    StatTable,
    a_k_table,
    a_kp_table,
    b_k_table,
    c_k_table,
    divisor_term,
    m_ell_table,
    m_ell_table_pdiff,
    mp_ell_table,
    p_table,
    q_table,
)

# ---------------------------------------------------------------------------
# StatTable indexing


def test_stat_table_negative_index_reads_zero():
    t = StatTable("b", {"k": 2}, (0, 1, 2))
    assert t[-1] == 0
    assert t[-99] == 0
    assert t[2] == 2


def test_stat_table_overflow_raises():
    t = StatTable("b", {"k": 2}, (0, 1, 2))
    with pytest.raises(IndexError):
        t[3]


# ---------------------------------------------------------------------------
# p and Q


def test_p_table_values():
    t = p_table(10)
    assert t[0] == 1 and t[5] == 7 and t[10] == 42


def test_q_table_matches_enumeration():
    t = q_table(20)
    assert t[0] == 1
    for n in range(21):
        assert t[n] == enumeration.q_distinct(n)


# ---------------------------------------------------------------------------
# b and a tables


def test_b_table_reference_values():
    t = b_k_table(3, 10)
    assert t[5] == 2 and t[4] == 1 and t[7] == 7
    assert t[0] == 0
    for n in range(1, 3):
        assert t[n] == 0


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_b_table_matches_enumeration(k):
    t = b_k_table(k, 30)
    for n in range(1, 31):
        assert t[n] == enumeration.b_k(n, k)


def test_a_table_reference_values():
    assert a_k_table(3, 6)[5] == 6
    assert a_kp_table(3, 1, 6)[5] == 9
    assert a_kp_table(3, 2, 6)[5] == 11


def test_a_tables_match_enumeration():
    for k in range(1, 5):
        tables = [a_kp_table(k, p, 25) for p in range(k)]
        for n in range(1, 26):
            for p in range(k):
                assert tables[p][n] == enumeration.a_kp(n, k, p), (n, k, p)


def test_a_table_param_validation():
    with pytest.raises(ValueError):
        a_kp_table(0, 0, 5)
    with pytest.raises(ValueError):
        a_kp_table(3, 3, 5)


def test_a_even_odd_closed_forms():
    # a_{2,0} = 2q^2/(1-q^2)^2 / (q;q)_inf and
    # a_{2,1} = q(1+q^2)/(1-q^2)^2 / (q;q)_inf
    order = 40
    inv_sq = (
        TruncatedSeries.one(order).mul_binomial(-1, 2).mul_binomial(-1, 2).invert()
    )
    even = partition_gf(order) * TruncatedSeries.monomial(2, 2, order) * inv_sq
    odd_num = TruncatedSeries.monomial(1, 1, order) + TruncatedSeries.monomial(
        1, 3, order
    )
    odd = partition_gf(order) * odd_num * inv_sq
    assert a_kp_table(2, 0, order).values == even.coeffs
    assert a_kp_table(2, 1, order).values == odd.coeffs


def test_a_total_closed_form():
    # the k=1 statistic has generating function q/(1-q)^2 / (q;q)_inf
    order = 40
    inv_sq = (
        TruncatedSeries.one(order).mul_binomial(-1, 1).mul_binomial(-1, 1).invert()
    )
    total = partition_gf(order) * TruncatedSeries.monomial(1, 1, order) * inv_sq
    assert a_k_table(1, order).values == total.coeffs


def test_linear_relations_between_a_and_b():
    order = 60
    for k in range(1, 9):
        b = b_k_table(k, order + k + 1)
        a0 = a_k_table(k, order + k + 1)
        for n in range(1, order + 1):
            assert a0[n] == k * b[n]
        for p in range(1, k):
            ap = a_kp_table(k, p, order + k + 1)
            for n in range(1, order + 1):
                assert ap[n] == (k - p) * b[n - p] + p * b[n + k - p]


def test_three_term_b2_recurrence():
    # total statistic as a three-term window of the k=2 b-statistic
    order = 50
    a1 = a_k_table(1, order + 2)
    b2 = b_k_table(2, order + 2)
    for n in range(1, order + 1):
        assert a1[n] == b2[n + 1] + 2 * b2[n] + b2[n - 1]


# ---------------------------------------------------------------------------
# c_k


def test_c_k_small_values():
    t = c_k_table(2, 12)
    assert t[6] == 6  # 1*Q(2) + 2*Q(1) + 3*Q(0)
    for k in (2, 3, 5):
        tk = c_k_table(k, 12)
        for n in range(min(k, 13)):
            assert tk[n] == 0


def test_c_2_even_arguments_match_subset_count():
    t = c_k_table(2, 30)
    for n in range(16):
        assert t[2 * n] == enumeration.c_subsets(n)


def test_c_k_odd_arguments():
    # for even k every odd argument vanishes; for odd k it need not
    t4 = c_k_table(4, 21)
    assert all(t4[n] == 0 for n in range(1, 22, 2))
    t3 = c_k_table(3, 10)
    assert t3[5] == 1


# ---------------------------------------------------------------------------
# M tables


def test_m_reference_value():
    assert m_ell_table(3, 10)[5] == 0


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_m_table_matches_enumeration(ell):
    t = m_ell_table(ell, 40)
    for n in range(41):
        assert t[n] == enumeration.m_ell(n, ell), (ell, n)


def test_m_three_routes_agree():
    for ell in range(1, 6):
        main = m_ell_table(ell, 120)  # pentagonal + gaussian routes inside
        pdiff = m_ell_table_pdiff(ell, 120)
        assert main.values == pdiff.values


def test_m_table_rejects_bad_ell():
    with pytest.raises(ValueError):
        m_ell_table(0, 5)


# ---------------------------------------------------------------------------
# MP tables


def test_mp_reference_series_value():
    # the series route puts the first weight of the ell=3 count at q^21,
    # so its value at n=5 is 0 (the verbal reading in `enumeration`
    # gives 3 there; that mismatch is reported, not hidden)
    assert mp_ell_table(3, 21)[5] == 0
    assert enumeration.mp_ell_verbal(5, 3) == 3


def test_mp_first_support_is_ell_times_2ell_plus_1():
    for ell in (1, 2, 3):
        t = mp_ell_table(ell, ell * (2 * ell + 1) + 1)
        first = ell * (2 * ell + 1)
        assert all(t[n] == 0 for n in range(first))
        assert t[first] == 1


def test_mp_nonnegative_long_range():
    t = mp_ell_table(1, 200)
    assert t[0] == 0
    assert all(v >= 0 for v in t.values)


def test_mp_table_rejects_bad_ell():
    with pytest.raises(ValueError):
        mp_ell_table(0, 5)


# ---------------------------------------------------------------------------
# divisor indicator term


def test_divisor_term_values():
    assert divisor_term(6, 3) == 2
    assert divisor_term(5, 3) == 0
    assert divisor_term(0, 7) == 0


def test_divisor_term_equals_iverson_expression():
    # (1 + (-1)^([k|n] + 1)) / 2 * n/k, evaluated in exact rationals,
    # collapses to the implemented branch
    for n in range(0, 40):
        for k in range(1, 8):
            iverson = 1 if n % k == 0 else 0
            weight = Fraction(1 + (-1) ** (iverson + 1), 2)
            assert weight * Fraction(n, k) == divisor_term(n, k)


def test_divisor_term_domain():
    with pytest.raises(ValueError):
        divisor_term(-1, 2)
    with pytest.raises(ValueError):
        divisor_term(3, 0)
