"""Tests for the exact truncated series and number-theoretic helpers."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from trivalent.series import (
    TruncSeries,
    euler_phi,
    euler_transform,
    inverse_euler_transform,
    moebius_mu,
    moebius_sieve,
)

Q = Fraction


def ts(order, *coeffs):
    return TruncSeries(order, [Q(c) for c in coeffs])


def count_involutions(n):
    """Brute-force oracle: permutations of n points squaring to the identity."""
    count = 0
    for p in itertools.permutations(range(n)):
        if all(p[p[i]] == i for i in range(n)):
            count += 1
    return count


# --- construction -----------------------------------------------------------


def test_padding_and_length_check():
    f = TruncSeries(3, [1, 2])
    assert f.coeffs == (Q(1), Q(2), Q(0), Q(0))
    with pytest.raises(ValueError):
        TruncSeries(1, [1, 2, 3])
    with pytest.raises(ValueError):
        TruncSeries(-1)


def test_from_terms_checks_range():
    f = TruncSeries.from_terms(4, {0: 1, 3: Q(1, 2)})
    assert f[3] == Q(1, 2)
    with pytest.raises(ValueError):
        TruncSeries.from_terms(2, {3: 1})


def test_immutable():
    f = ts(2, 1, 1)
    with pytest.raises(AttributeError):
        f.order = 5


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        TruncSeries(2, [0.5])
    with pytest.raises(TypeError):
        TruncSeries.from_terms(2, {1: 0.1})
    with pytest.raises(TypeError):
        ts(1, 1, 1).scale(0.5)


# --- add / mul --------------------------------------------------------------


def test_add_cancellation():
    assert ts(1, 1, 1) + ts(1, 1, -1) == ts(1, 2)


def test_add_identity_and_disjoint_support():
    f = ts(3, 0, 5, 0, 7)
    assert f + TruncSeries.zero(3) == f
    assert ts(2, 0, 1) + ts(2, 0, 0, 1) == ts(2, 0, 1, 1)


def test_add_order_mismatch():
    with pytest.raises(ValueError):
        ts(2, 1) + ts(3, 1)


def test_mul_difference_of_squares():
    assert ts(2, 1, 1) * ts(2, 1, -1) == ts(2, 1, 0, -1)


def test_mul_identity_and_geometric():
    f = ts(4, 3, 1, 4, 1, 5)
    assert f * TruncSeries.one(4) == f
    geometric = TruncSeries(5, [1] * 6)
    assert geometric * ts(5, 1, -1) == TruncSeries.one(5)


def test_scalar_mul():
    assert 2 * ts(1, 1, 3) == ts(1, 2, 6)
    assert ts(1, 1, 3) * Q(1, 2) == ts(1, Q(1, 2), Q(3, 2))


# --- exp / log --------------------------------------------------------------


def test_exp_of_zero():
    assert TruncSeries.zero(5).exp() == TruncSeries.one(5)


def test_exp_counts_involutions():
    # exp(t + t^2/2) is the EGF of involutions; the expected coefficients are
    # frozen from the brute-force count.
    oracle = [count_involutions(n) for n in range(5)]
    assert oracle == [1, 1, 2, 4, 10]
    f = TruncSeries.from_terms(4, {1: 1, 2: Q(1, 2)})
    expected = TruncSeries(4, [Q(c, math.factorial(n)) for n, c in enumerate(oracle)])
    assert f.exp() == expected
    assert f.exp() == ts(4, 1, 1, 1, Q(2, 3), Q(5, 12))


def test_exp_requires_zero_constant_term():
    with pytest.raises(ValueError):
        ts(2, 1, 1).exp()


def test_log_of_one_and_classical_expansion():
    assert TruncSeries.one(4).log() == TruncSeries.zero(4)
    geometric = TruncSeries(4, [1] * 5)
    assert geometric.log() == ts(4, 0, 1, Q(1, 2), Q(1, 3), Q(1, 4))


def test_log_requires_unit_constant_term():
    with pytest.raises(ValueError):
        ts(2, 2, 1).log()


def test_exp_log_roundtrip_examples():
    one_plus_t = ts(5, 1, 1)
    assert one_plus_t.log().exp() == one_plus_t
    cube = TruncSeries.from_terms(6, {3: 1})
    assert cube.exp().log() == cube


# --- substitution, Euler operator -------------------------------------------


def test_substitute_power():
    t = TruncSeries.from_terms(4, {1: 1})
    assert t.substitute_power(3) == TruncSeries.from_terms(4, {3: 1})
    f = ts(4, 1, 2, 3, 4, 5)
    assert f.substitute_power(1) == f
    assert ts(4, 1, 1, 1).substitute_power(2) == ts(4, 1, 0, 1, 0, 1)
    with pytest.raises(ValueError):
        f.substitute_power(0)


def test_euler_operator():
    assert TruncSeries.one(3).euler_operator() == TruncSeries.zero(3)
    assert ts(2, 0, 1, 1).euler_operator() == ts(2, 0, 1, 2)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_euler_operator_is_a_derivation(data):
    order = data.draw(st.integers(1, 12))
    rational = st.fractions(min_value=-20, max_value=20, max_denominator=8)
    f = TruncSeries(order, data.draw(st.lists(rational, min_size=order + 1, max_size=order + 1)))
    g = TruncSeries(order, data.draw(st.lists(rational, min_size=order + 1, max_size=order + 1)))
    assert (f * g).euler_operator() == f.euler_operator() * g + f * g.euler_operator()


# --- transforms -------------------------------------------------------------


def test_euler_transform_of_single_part():
    # One connected type per size 1 gives all partitions of a single
    # part-type: the geometric series.
    t = TruncSeries.from_terms(6, {1: 1})
    assert euler_transform(t) == TruncSeries(6, [1] * 7)


def test_inverse_euler_of_geometric_is_t():
    geometric = TruncSeries(6, [1] * 7)
    assert inverse_euler_transform(geometric) == TruncSeries.from_terms(6, {1: 1})


def test_inverse_euler_of_one_is_zero():
    assert inverse_euler_transform(TruncSeries.one(5)) == TruncSeries.zero(5)


def test_transform_domain_errors():
    with pytest.raises(ValueError):
        euler_transform(TruncSeries.one(3))
    with pytest.raises(ValueError):
        inverse_euler_transform(TruncSeries.zero(3))


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_exp_log_roundtrip_random(data):
    order = data.draw(st.integers(1, 64))
    rational = st.fractions(min_value=-9, max_value=9, max_denominator=6)
    coeffs = [Q(0)] + data.draw(st.lists(rational, min_size=order, max_size=order))
    f = TruncSeries(order, coeffs)
    assert f.exp().log() == f


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_transform_roundtrip_random(data):
    order = data.draw(st.integers(1, 64))
    # integer-coefficient types series with constant term 1
    coeffs = [Q(1)] + [
        Q(c) for c in data.draw(st.lists(st.integers(-6, 6), min_size=order, max_size=order))
    ]
    g = TruncSeries(order, coeffs)
    assert euler_transform(inverse_euler_transform(g)) == g


def test_exactness_forced_denominators():
    # exp of an integer series introduces denominators dividing n! only.
    f = ts(8, 0, 3, -2, 5, 1, 0, 2, -1, 4)
    for n, c in enumerate(f.exp().coeffs):
        assert (c * math.factorial(n)).denominator == 1
    g = ts(8, 1, 3, -2, 5, 1, 0, 2, -1, 4)
    for n, c in enumerate(g.log().coeffs):
        assert (c * math.factorial(n)).denominator == 1


# --- number theory ----------------------------------------------------------


@pytest.mark.parametrize("n,expected", [(1, 1), (6, 2), (9, 6), (12, 4), (97, 96)])
def test_euler_phi_values(n, expected):
    assert euler_phi(n) == expected


@pytest.mark.parametrize("n,expected", [(1, 1), (2, -1), (4, 0), (6, 1), (30, -1)])
def test_moebius_values(n, expected):
    assert moebius_mu(n) == expected


def test_phi_mu_domain_errors():
    with pytest.raises(ValueError):
        euler_phi(0)
    with pytest.raises(ValueError):
        moebius_mu(0)


def test_divisor_sum_identities():
    limit = 10000
    phi = [0] + [euler_phi(n) for n in range(1, limit + 1)]
    mu = [0] + [moebius_mu(n) for n in range(1, limit + 1)]
    phi_sum = [0] * (limit + 1)
    mu_sum = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for n in range(d, limit + 1, d):
            phi_sum[n] += phi[d]
            mu_sum[n] += mu[d]
    for n in range(1, limit + 1):
        assert phi_sum[n] == n
        assert mu_sum[n] == (1 if n == 1 else 0)


def test_sieve_matches_pointwise():
    mu = moebius_sieve(500)
    assert all(mu[n] == moebius_mu(n) for n in range(1, 501))
