import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from k3enum.errors import (
    InsufficientTruncation,
    NonInvertibleLeading,
    NonzeroConstantTerm,
    ZeroLeadingCoefficient,
)
from k3enum.series import (
    INF,
    BiSeries,
    TruncatedSeries,
    add,
    bi_invert,
    bi_mul,
    dlog_operator,
    exp_series,
    invert,
    mul,
    product_form,
    substitute_power,
)

q = TruncatedSeries.monomial(1)
ONE = TruncatedSeries.constant(1)


def geometric(trunc):
    return TruncatedSeries({n: 1 for n in range(trunc)}, trunc)


# -- strategies ---------------------------------------------------------------------

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series(draw, lo=-20, hi=20, exact=None):
    trunc = draw(st.integers(lo + 1, hi)) if exact is not True else INF
    if exact is None and draw(st.booleans()):
        trunc = INF
    top = hi if trunc == INF else trunc - 1
    coeffs = draw(st.dictionaries(st.integers(lo, top), small_fracs, max_size=8))
    return TruncatedSeries(coeffs, trunc)


@st.composite
def invertible(draw):
    v = draw(st.integers(-5, 5))
    lead = draw(small_fracs.filter(bool))
    rest = draw(st.dictionaries(st.integers(v + 1, v + 10), small_fracs, max_size=6))
    trunc = draw(st.integers(v + 1, v + 12))
    return TruncatedSeries({v: lead, **rest}, trunc)


@st.composite
def positive_valuation(draw):
    trunc = draw(st.integers(1, 12))
    coeffs = draw(st.dictionaries(st.integers(1, 11), small_fracs, max_size=5))
    return TruncatedSeries(coeffs, trunc)


def extend(s: TruncatedSeries, junk: dict) -> TruncatedSeries:
    """An exact series that agrees with ``s`` below its truncation."""
    t = s.trunc
    extra = {e + t: c for e, c in junk.items()} if t != INF else {}
    return TruncatedSeries({**dict(s.items()), **extra}, INF)


# -- examples -----------------------------------------------------------------------


def test_add_cancellation():
    assert (1 + q) + (1 - q) == TruncatedSeries.constant(2)


def test_add_identity_and_inverse():
    f = product_form(lambda n: -24, 10)
    assert add(TruncatedSeries.zero(), f) == f
    assert (f + (-f)).is_zero()
    assert (f - f).trunc == 10


def test_add_trunc_is_min():
    a = TruncatedSeries({0: 1}, 5)
    b = TruncatedSeries({0: 1}, 3)
    assert (a + b).trunc == 3


def test_mul_geometric_series():
    assert (mul(1 - q, geometric(8))).agrees_with(ONE)
    assert mul(1 - q, geometric(8)) == TruncatedSeries.constant(1, 8)


def test_mul_laurent_exponents():
    assert TruncatedSeries.monomial(-1) * q == ONE


def test_mul_trunc_rule():
    a = TruncatedSeries({-1: 1, 0: 2}, 4)
    b = TruncatedSeries({2: 1}, 6)
    # known below min(v_a + t_b, v_b + t_a) = min(5, 6)
    assert (a * b).trunc == 5


def test_invert_geometric():
    assert invert(1 - q, prec=6) == geometric(6)


def test_invert_delta_like():
    d = product_form(lambda n: 24, 9).shift(1)
    inv = d.invert()
    assert inv.coefficients(-1, 2) == [1, 24, 324]
    assert (d * inv).agrees_with(ONE)
    assert (d * inv).trunc == 9


def test_invert_monomial_exact():
    assert q.invert() == TruncatedSeries.monomial(-1)
    assert TruncatedSeries.monomial(3, Fraction(2, 3)).invert() == TruncatedSeries.monomial(-3, Fraction(3, 2))


def test_invert_errors():
    with pytest.raises(ZeroLeadingCoefficient):
        TruncatedSeries.zero(5).invert()
    with pytest.raises(ValueError):
        (1 - q).invert()


def test_exp_examples():
    assert exp_series(TruncatedSeries.zero(5)) == TruncatedSeries.constant(1, 5)
    e = exp_series(q.truncate(4))
    assert e.coefficients(0, 4) == [1, 1, Fraction(1, 2), Fraction(1, 6)]
    with pytest.raises(NonzeroConstantTerm):
        exp_series(TruncatedSeries({0: 1, 1: 1}, 4))


def test_product_form_examples():
    assert product_form(lambda n: -24, 4).coefficients(0, 4) == [1, 24, 324, 3200]
    assert product_form(lambda n: 0, 6) == TruncatedSeries.constant(1, 6)
    # partitions
    assert product_form(lambda n: -1, 10).coefficients(0, 10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_dlog_operator():
    assert dlog_operator(TruncatedSeries.monomial(5, 3)) == TruncatedSeries.monomial(5, 15)
    assert dlog_operator(TruncatedSeries.constant(7)).is_zero()


def test_substitute_power():
    assert substitute_power(1 + q, 2) == 1 + TruncatedSeries.monomial(2)
    f = product_form(lambda n: -1, 7)
    assert substitute_power(f, 1) == f
    assert substitute_power(f, 3).trunc == 21


def test_getitem_beyond_trunc_raises():
    with pytest.raises(InsufficientTruncation):
        TruncatedSeries({0: 1}, 3)[3]


def test_repr_and_hash():
    s = TruncatedSeries({-1: 1, 2: Fraction(-1, 2)}, 4)
    assert repr(s) == "TruncatedSeries(q^-1 - 1/2*q^2 + O(q^4))"
    assert hash(s) == hash(TruncatedSeries({-1: 1, 2: Fraction(-1, 2)}, 4))


def test_no_floats_stored():
    s = product_form(lambda n: -24, 12).invert(prec=12) * Fraction(1, 3)
    assert all(isinstance(c, Fraction) for _, c in s.items())


# -- naive finite-product oracle ----------------------------------------------------


def _naive_product(expnt, trunc):
    poly = [0] * trunc
    poly[0] = 1
    for n in range(1, trunc):
        e = expnt(n)
        if e >= 0:
            factor = [0] * trunc
            for k in range(0, e + 1):
                if n * k < trunc:
                    factor[n * k] = math.comb(e, k) * (-1) ** k
        else:
            factor = [0] * trunc
            k = 0
            while n * k < trunc:
                factor[n * k] = math.comb(-e + k - 1, k)
                k += 1
        poly = [sum(poly[i] * factor[m - i] for i in range(m + 1)) for m in range(trunc)]
    return poly


@given(st.lists(st.integers(-30, 30), min_size=12, max_size=12), st.integers(1, 12))
@settings(max_examples=60, deadline=None)
def test_product_form_matches_naive(exps, trunc):
    expnt = lambda n: exps[n - 1]
    assert product_form(expnt, trunc).coefficients(0, trunc) == _naive_product(expnt, trunc)


# -- ring laws and truncation soundness ---------------------------------------------


@given(series(), series(), series())
@settings(max_examples=150, deadline=None)
def test_ring_laws(a, b, c):
    assert (a + b).agrees_with(b + a)
    assert (a * b) == (b * a)
    assert ((a + b) + c).agrees_with(a + (b + c))
    assert ((a * b) * c).agrees_with(a * (b * c))
    assert (a * (b + c)).agrees_with(a * b + a * c)


@given(series(), series(), st.dictionaries(st.integers(0, 6), small_fracs, max_size=4), st.dictionaries(st.integers(0, 6), small_fracs, max_size=4))
@settings(max_examples=150, deadline=None)
def test_mul_trunc_is_sound(a, b, ja, jb):
    # any completion of the inputs yields the same product below the claimed trunc
    exact = extend(a, ja) * extend(b, jb)
    assert (a * b).agrees_with(exact)


@given(invertible(), st.dictionaries(st.integers(0, 6), small_fracs, max_size=4))
@settings(max_examples=150, deadline=None)
def test_invert_roundtrip_and_soundness(a, junk):
    inv = a.invert()
    assert (a * inv).agrees_with(ONE)
    full = extend(a, junk).invert(prec=inv.trunc + 3)
    assert inv.agrees_with(full)


@given(positive_valuation(), positive_valuation())
@settings(max_examples=100, deadline=None)
def test_exp_is_homomorphism(a, b):
    assert exp_series(a + b).agrees_with(exp_series(a) * exp_series(b))


@given(series(lo=-8, hi=10), series(lo=-8, hi=10))
@settings(max_examples=100, deadline=None)
def test_leibniz(f, g):
    assert dlog_operator(f * g).agrees_with(dlog_operator(f) * g + f * dlog_operator(g))


@given(series(lo=-6, hi=8), st.integers(1, 4))
@settings(max_examples=80, deadline=None)
def test_substitute_power_is_ring_map(f, d):
    sq = substitute_power(f * f, d)
    assert sq.agrees_with(substitute_power(f, d) * substitute_power(f, d))


# -- two variables -------------------------------------------------------------------


def test_bi_invert_geometric():
    # 1 - q2/q1 in the domain |q2| < |q1|
    a = BiSeries({0: ONE, 1: TruncatedSeries.monomial(-1, -1)})
    inv = bi_invert(a, prec2=6)
    for n in range(6):
        assert inv[n] == TruncatedSeries.monomial(-n)


def test_bi_invert_one():
    one = BiSeries({0: ONE})
    assert bi_invert(one) == one


def test_bi_invert_roundtrip_j_difference():
    from k3enum.modular import j_normalized

    j = j_normalized(12)
    a = BiSeries.from_inner(j) - BiSeries.from_outer(j_normalized(10))
    inv = a.invert()
    assert inv.outer_min == 1
    assert inv[1] == TruncatedSeries.constant(-1)
    prod = bi_mul(a, inv)
    for n in range(0, 8):
        for e in range(-8, 3):
            assert prod[n][e] == (1 if (n, e) == (0, 0) else 0)


def test_bi_invert_needs_invertible_lead():
    with pytest.raises(NonInvertibleLeading):
        BiSeries({0: TruncatedSeries.zero(3)}, 4).invert()


@given(series(lo=-6, hi=10), series(lo=-6, hi=10))
@settings(max_examples=80, deadline=None)
def test_bi_outer_constants_match_univariate(a, b):
    A, B = BiSeries.from_inner(a), BiSeries.from_inner(b)
    assert (A * B)[0] == a * b
    assert (A + B)[0] == a + b


@given(invertible())
@settings(max_examples=60, deadline=None)
def test_bi_invert_matches_univariate_inner(a):
    inv = BiSeries.from_inner(a).invert(prec2=3)
    assert inv[0] == a.invert()


@given(positive_valuation())
@settings(max_examples=60, deadline=None)
def test_bi_exp_matches_univariate_outer(a):
    b = BiSeries.from_outer(a).exp()
    e = exp_series(a)
    for n in range(a.trunc):
        assert b[n].agrees_with(TruncatedSeries.constant(e[n]))
