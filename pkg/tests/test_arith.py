from fractions import Fraction
from math import factorial, gcd

import pytest
from hypothesis import given, strategies as st

from k3enum.arith import bernoulli, bernoulli_signed, binomial, divisors, moebius, partition_count, sigma
from k3enum.errors import OutOfRange
from k3enum.series import TruncatedSeries, product_form


def test_sigma_examples():
    assert sigma(1, 2) == 3
    assert sigma(1, 1) == 1
    assert sigma(9, 2) == 1 + 2**9 == 513


def test_sigma_multiplicative():
    for m in range(1, 201):
        for n in range(1, 201 // m + 1):
            if gcd(m, n) == 1:
                assert sigma(1, m * n) == sigma(1, m) * sigma(1, n)
                assert sigma(3, m * n) == sigma(3, m) * sigma(3, n)


def test_divisors_brute_force():
    for n in range(1, 120):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def _brute_partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        return 1
    return sum(_brute_partitions(n - k, k) for k in range(1, min(n, max_part) + 1))


def test_partition_count_examples():
    assert partition_count(0) == 1
    assert partition_count(5) == 7 == _brute_partitions(5)
    assert [partition_count(n) for n in range(15)] == [_brute_partitions(n) for n in range(15)]


def test_partition_count_matches_product_form():
    prod = product_form(lambda n: -1, 61)
    assert [partition_count(n) for n in range(61)] == prod.coefficients(0, 61)


def test_bernoulli_positive_convention():
    assert bernoulli(1) == Fraction(1, 6)
    assert bernoulli(2) == Fraction(1, 30)
    assert bernoulli(3) == Fraction(1, 42)
    assert bernoulli_signed(2) == Fraction(1, 6)
    assert bernoulli_signed(4) == Fraction(-1, 30)
    assert bernoulli_signed(1) == Fraction(-1, 2)


def test_bernoulli_generating_function():
    # (e^x - 1) * (1 - x/2 + sum (-1)^(k+1) B_k x^(2k)/(2k)!) = x through x^17
    N = 18
    expm1 = TruncatedSeries({n: Fraction(1, factorial(n)) for n in range(1, N)}, N)
    coeffs = {0: 1, 1: Fraction(-1, 2)}
    for k in range(1, 9):
        coeffs[2 * k] = (-1) ** (k + 1) * bernoulli(k) / factorial(2 * k)
    bx = TruncatedSeries(coeffs, N)
    assert (expm1 * bx).agrees_with(TruncatedSeries.monomial(1))
    assert all(bernoulli(k) > 0 for k in range(1, 9))


def test_moebius():
    assert moebius(1) == 1
    assert moebius(4) == 0
    assert moebius(30) == -1
    for n in range(2, 101):
        assert sum(moebius(d) for d in divisors(n)) == 0


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert 2 * binomial(324, 2) == 104652
    with pytest.raises(OutOfRange):
        binomial(3, 4)
    with pytest.raises(OutOfRange):
        binomial(-1, 0)


@given(st.integers(1, 400), st.integers(0, 5))
def test_sigma_brute(n, k):
    assert sigma(k, n) == sum(d**k for d in range(1, n + 1) if n % d == 0)
