"""Number-theoretic scalar kernels: divisor sums, partitions, Bernoulli numbers."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import OutOfRange

__all__ = ["divisors", "sigma", "partition_count", "bernoulli", "bernoulli_signed", "moebius", "binomial"]


def divisors(n: int) -> list:
    """Positive divisors of ``n`` in increasing order (trial division)."""
    if n < 1:
        raise OutOfRange(f"divisors need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(k: int, n: int) -> int:
    """Divisor power sum ``sum_{d | n} d**k``."""
    if k < 0:
        raise OutOfRange("sigma needs k >= 0")
    return sum(d**k for d in divisors(n))


_partitions = [1]


def partition_count(n: int) -> int:
    """Number of partitions of ``n``, via Euler's pentagonal recurrence."""
    if n < 0:
        raise OutOfRange(f"partition_count needs n >= 0, got {n}")
    # the cache only grows by appending complete prefixes, so concurrent
    # readers never observe a wrong value
    while len(_partitions) <= n:
        m = len(_partitions)
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * _partitions[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * _partitions[m - g2]
            j += 1
        _partitions.append(total)
    return _partitions[n]


@lru_cache(maxsize=None)
def _bernoulli_standard(n: int) -> Fraction:
    # B_n with x/(e^x - 1) = sum B_n x^n / n!, so B_1 = -1/2
    if n == 0:
        return Fraction(1)
    return -sum(comb(n + 1, j) * _bernoulli_standard(j) for j in range(n)) / (n + 1)


def bernoulli_signed(n: int) -> Fraction:
    """Standard Bernoulli number ``B_n`` (``B_2 = 1/6``, ``B_4 = -1/30``)."""
    if n < 0:
        raise OutOfRange("bernoulli_signed needs n >= 0")
    return _bernoulli_standard(n)


def bernoulli(k: int) -> Fraction:
    """Positive Bernoulli number ``B_k`` in the even-index convention.

    Defined by ``x/(e^x - 1) = 1 - x/2 + sum_{k>=1} (-1)^(k+1) B_k x^(2k)/(2k)!``,
    so ``B_1 = 1/6``, ``B_2 = 1/30``, ``B_3 = 1/42`` and all values are positive.
    """
    if k < 1:
        raise OutOfRange(f"bernoulli needs k >= 1, got {k}")
    return abs(_bernoulli_standard(2 * k))


def moebius(n: int) -> int:
    if n < 1:
        raise OutOfRange(f"moebius needs n >= 1, got {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise OutOfRange(f"binomial({n}, {k}) outside 0 <= k <= n")
    return comb(n, k)
