"""q-expansions of the quasi-modular forms used throughout the package.

Eisenstein series are indexed by *half* their weight, so ``eisenstein(k)``
has weight ``2k``:

=====  ======  ==========================  ================
index  weight  expansion                    classical name
=====  ======  ==========================  ================
E_1    2       1 - 24 sum sigma_1(n) q^n   E_2 (quasi-modular)
E_2    4       1 + 240 sum sigma_3(n) q^n  E_4
E_3    6       1 - 504 sum sigma_5(n) q^n  E_6
E_5    10      1 - 264 sum sigma_9(n) q^n  E_10 = E_4 E_6
=====  ======  ==========================  ================

All transcendental factors are normalized away: ``delta_normalized`` is
``q prod (1 - q^n)^24``, the discriminant divided by ``(2 pi)^12``.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import bernoulli, sigma
from .errors import OutOfRange
from .series import TruncatedSeries, product_form

__all__ = [
    "eisenstein",
    "delta_normalized",
    "j_normalized",
    "f_series",
    "sigma_weighted_series",
    "quasimodular_check_F_g",
]


def eisenstein(k: int, trunc: int) -> TruncatedSeries:
    """Normalized ``E_k = 1 + (-1)^k (4k/B_k) sum sigma_{2k-1}(n) q^n`` (weight ``2k``)."""
    if k < 1:
        raise OutOfRange(f"Eisenstein index must be >= 1, got {k}")
    if trunc < 1:
        raise OutOfRange("trunc must be >= 1")
    c = (-1) ** k * Fraction(4 * k) / bernoulli(k)
    coeffs = {0: 1}
    for n in range(1, trunc):
        coeffs[n] = c * sigma(2 * k - 1, n)
    return TruncatedSeries(coeffs, trunc)


def delta_normalized(trunc: int) -> TruncatedSeries:
    """``q prod_{n>=1} (1 - q^n)^24``, known below ``q**trunc``."""
    if trunc < 2:
        raise OutOfRange("delta_normalized needs trunc >= 2")
    return product_form(lambda n: 24, trunc - 1).shift(1)


def _over_delta(numerator: TruncatedSeries, trunc: int) -> TruncatedSeries:
    # dividing by delta (leading q) costs one order relative to the numerator
    inv = delta_normalized(trunc + 2).invert()
    return (numerator * inv).truncate(trunc)


def j_normalized(trunc: int) -> TruncatedSeries:
    """``E_2^3 / delta`` = ``1/q + 744 + 196884 q + ...``, known below ``q**trunc``."""
    if trunc < 1:
        raise OutOfRange("j_normalized needs trunc >= 1")
    e2 = eisenstein(2, trunc + 1)
    return _over_delta(e2 * e2 * e2, trunc)


def f_series(trunc: int) -> TruncatedSeries:
    """``E_2 E_3 / delta`` = ``1/q - 240 - 141444 q + ...``, known below ``q**trunc``."""
    if trunc < 1:
        raise OutOfRange("f_series needs trunc >= 1")
    return _over_delta(eisenstein(2, trunc + 1) * eisenstein(3, trunc + 1), trunc)


def sigma_weighted_series(trunc: int) -> TruncatedSeries:
    """``sum_{n>=1} n sigma_1(n) q^n``."""
    return TruncatedSeries({n: n * sigma(1, n) for n in range(1, trunc)}, trunc)


def quasimodular_check_F_g(g: int, trunc: int, literal_shift: bool = False) -> bool:
    """Check ``q^-1 F_g = (-(1/24) D E_1)^g / delta`` below ``q**trunc``.

    ``F_g`` is the genus-``g`` generating series whose ``q^p`` coefficient is
    ``N_g^p`` (so ``F_0 = 1 + 24 q + ...``).  With that normalization the
    identity needs the factor ``q^-1``; at ``g = 0`` both sides are then
    ``1/delta``.  Passing ``literal_shift=True`` tests the variant with a
    factor ``q`` instead, which does not hold.
    """
    from .k3counts import gbl_series

    if g < 0:
        raise OutOfRange("genus must be non-negative")
    e1 = eisenstein(1, trunc + 2)
    base = e1.derivative_D() * Fraction(-1, 24)
    rhs = (base**g) * delta_normalized(trunc + 2).invert()
    f = gbl_series(g, trunc + 2)
    lhs = f.shift(1) if literal_shift else f.shift(-1)
    if lhs.trunc < trunc or rhs.trunc < trunc:
        return False
    return lhs.agrees_with(rhs, upto=trunc)
