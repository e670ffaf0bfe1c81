"""Exact truncated Laurent series in one variable, and series in two variables.

A :class:`TruncatedSeries` stores finitely many exact rational coefficients
together with a truncation order ``trunc``: the coefficient of ``q**n`` is
known exactly for every ``n < trunc`` and unknown from ``trunc`` on.  A value
of ``math.inf`` for ``trunc`` marks an exact (finite Laurent) polynomial.

Every operation works out the largest truncation order for which all the
coefficients it emits are provably exact, so precision is never lost
silently.  Values are immutable.

A :class:`BiSeries` is a power series in an *outer* variable whose
coefficients are :class:`TruncatedSeries` in an *inner* variable.  Which
geometric variable plays which role fixes the expansion domain: with outer
``q2`` and inner ``q1`` one works in the region ``|q2| < |q1|``, where
``1/(q1 - q2)`` expands in powers of ``q2/q1``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, Iterator, Mapping, Optional, Tuple, Union

from .errors import (
    InsufficientTruncation,
    NonInvertibleLeading,
    NonzeroConstantTerm,
    ZeroLeadingCoefficient,
)

INF = math.inf

Scalar = Union[int, Fraction]
Order = Union[int, float]  # an int, or math.inf for exact polynomials

__all__ = [
    "INF",
    "TruncatedSeries",
    "BiSeries",
    "add",
    "mul",
    "invert",
    "exp_series",
    "product_form",
    "dlog_operator",
    "substitute_power",
    "bi_mul",
    "bi_invert",
]


def _is_scalar(x) -> bool:
    return isinstance(x, Rational)


def _check_order(t) -> Order:
    if t == INF:
        return INF
    if isinstance(t, bool) or not isinstance(t, int):
        raise TypeError(f"truncation order must be an int or math.inf, got {t!r}")
    return t


class TruncatedSeries:
    """Laurent series ``sum c_n q**n`` with exact rational coefficients.

    >>> q = TruncatedSeries.monomial(1)
    >>> (1 - q).invert(prec=4)
    TruncatedSeries(1 + q + q^2 + q^3 + O(q^4))
    """

    __slots__ = ("_c", "_trunc")

    def __init__(self, coeffs: Optional[Mapping[int, Scalar]] = None, trunc: Order = INF):
        trunc = _check_order(trunc)
        c: Dict[int, Fraction] = {}
        if coeffs:
            for e, v in coeffs.items():
                if e >= trunc:
                    continue
                v = Fraction(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._trunc = trunc

    @classmethod
    def _raw(cls, c: Dict[int, Fraction], trunc: Order) -> "TruncatedSeries":
        # trusted constructor: c already cleaned
        s = object.__new__(cls)
        s._c = c
        s._trunc = trunc
        return s

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, trunc: Order = INF) -> "TruncatedSeries":
        return cls({}, trunc)

    @classmethod
    def constant(cls, c: Scalar, trunc: Order = INF) -> "TruncatedSeries":
        return cls({0: c}, trunc)

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1, trunc: Order = INF) -> "TruncatedSeries":
        return cls({n: c}, trunc)

    @classmethod
    def from_list(cls, values, start: int = 0, trunc: Optional[Order] = None) -> "TruncatedSeries":
        """Series whose coefficients of ``q**start, q**(start+1), ...`` are ``values``.

        Without ``trunc`` the series is known exactly up to the last listed
        exponent.
        """
        values = list(values)
        if trunc is None:
            trunc = start + len(values)
        return cls({start + i: v for i, v in enumerate(values)}, trunc)

    @classmethod
    def from_function(cls, fn: Callable[[int], Scalar], start: int, trunc: int) -> "TruncatedSeries":
        return cls({n: fn(n) for n in range(start, trunc)}, trunc)

    # -- inspection -------------------------------------------------------

    @property
    def trunc(self) -> Order:
        return self._trunc

    @property
    def min_exp(self) -> Order:
        """Lowest exponent that may carry a nonzero coefficient."""
        return min(self._c) if self._c else self._trunc

    @property
    def is_exact(self) -> bool:
        return self._trunc == INF

    def is_zero(self) -> bool:
        """True when every *known* coefficient vanishes."""
        return not self._c

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self._c.items()))

    def exponents(self):
        return sorted(self._c)

    def __getitem__(self, n: int) -> Fraction:
        if n >= self._trunc:
            raise InsufficientTruncation(
                f"coefficient of q^{n} requested but series is only known below q^{self._trunc}"
            )
        return self._c.get(n, Fraction(0))

    def coeff(self, n: int) -> Fraction:
        return self[n]

    def coefficients(self, start: int, stop: int) -> list:
        return [self[n] for n in range(start, stop)]

    def truncate(self, n: Order) -> "TruncatedSeries":
        t = min(self._trunc, n)
        return TruncatedSeries._raw({e: v for e, v in self._c.items() if e < t}, t)

    def agrees_with(self, other: "TruncatedSeries", upto: Optional[Order] = None) -> bool:
        """Coefficientwise equality below the common precision (and below ``upto``)."""
        t = min(self._trunc, other._trunc)
        if upto is not None:
            t = min(t, upto)
        keys = {e for e in self._c if e < t} | {e for e in other._c if e < t}
        return all(self._c.get(e, 0) == other._c.get(e, 0) for e in keys)

    def __eq__(self, other) -> bool:
        if _is_scalar(other):
            other = TruncatedSeries.constant(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._trunc == other._trunc and self._c == other._c

    def __hash__(self) -> int:
        return hash((frozenset(self._c.items()), self._trunc))

    def __repr__(self) -> str:
        terms = []
        for e, c in self.items():
            if e == 0:
                terms.append(str(c))
                continue
            mono = "q" if e == 1 else f"q^{e}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if self._trunc != INF:
            terms.append(f"O(q^{self._trunc})")
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body.replace('+ -', '- ')})"

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if _is_scalar(other):
            return TruncatedSeries.constant(other)
        raise TypeError(f"cannot combine TruncatedSeries with {type(other).__name__}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries) and not _is_scalar(other):
            return NotImplemented
        other = self._coerce(other)
        t = min(self._trunc, other._trunc)
        c = {e: v for e, v in self._c.items() if e < t}
        for e, v in other._c.items():
            if e >= t:
                continue
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return TruncatedSeries._raw(c, t)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw({e: -v for e, v in self._c.items()}, self._trunc)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries) and not _is_scalar(other):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: Scalar) -> "TruncatedSeries":
        k = Fraction(k)
        if not k:
            return TruncatedSeries._raw({}, self._trunc)
        return TruncatedSeries._raw({e: k * v for e, v in self._c.items()}, self._trunc)

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self, other
        t = min(a.min_exp + b._trunc, b.min_exp + a._trunc)
        c: Dict[int, Fraction] = {}
        for e1, v1 in a._c.items():
            for e2, v2 in b._c.items():
                e = e1 + e2
                if e < t:
                    c[e] = c.get(e, 0) + v1 * v2
        return TruncatedSeries._raw({e: v for e, v in c.items() if v}, t)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if _is_scalar(other):
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, TruncatedSeries):
            return self * other.invert()
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return self.invert().scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "TruncatedSeries":
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        base = self
        if n < 0:
            base, n = self.invert(), -n
        result = TruncatedSeries.constant(1)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``q**k``."""
        return TruncatedSeries._raw({e + k: v for e, v in self._c.items()}, self._trunc + k)

    # -- analytic-flavoured operations ------------------------------------

    def invert(self, prec: Optional[int] = None) -> "TruncatedSeries":
        """Multiplicative inverse, shifting out a Laurent leading exponent.

        If the input is known to ``O(q**t)`` with leading exponent ``v``, the
        inverse is known to ``O(q**(t - 2v))``.  ``prec`` caps the result's
        truncation; it is required when inverting an exact polynomial that
        is not a monomial.
        """
        if not self._c:
            raise ZeroLeadingCoefficient(
                f"series vanishes to its working precision O(q^{self._trunc})"
            )
        v = min(self._c)
        lead = self._c[v]
        t_out = self._trunc - 2 * v
        if prec is not None:
            t_out = min(t_out, prec)
        if t_out == INF:
            if len(self._c) == 1:
                return TruncatedSeries._raw({-v: 1 / lead}, INF)
            raise ValueError("inverse of an exact non-monomial is infinite; pass prec=")
        n_terms = t_out + v  # relative exponents 0 .. n_terms-1
        h = [(e - v, c / lead) for e, c in sorted(self._c.items()) if e != v]
        g = [Fraction(0)] * max(n_terms, 0)
        if n_terms > 0:
            g[0] = Fraction(1)
        for n in range(1, n_terms):
            acc = Fraction(0)
            for k, hk in h:
                if k > n:
                    break
                acc += hk * g[n - k]
            g[n] = -acc
        inv_lead = 1 / lead
        return TruncatedSeries._raw(
            {n - v: inv_lead * x for n, x in enumerate(g) if x}, t_out
        )

    def exp(self, prec: Optional[int] = None) -> "TruncatedSeries":
        """Formal exponential of a series with zero constant term."""
        for e in self._c:
            if e == 0:
                raise NonzeroConstantTerm("exp needs a series with zero constant term")
            if e < 0:
                raise NonzeroConstantTerm("exp needs a series of positive valuation")
        if self._trunc <= 0:
            raise InsufficientTruncation("constant term of the exponent is unknown")
        t_out = self._trunc if prec is None else min(self._trunc, prec)
        if t_out == INF:
            if not self._c:
                return TruncatedSeries.constant(1)
            raise ValueError("exp of an exact nonzero polynomial is infinite; pass prec=")
        a = sorted((e, e * c) for e, c in self._c.items())
        out = [Fraction(0)] * t_out
        out[0] = Fraction(1)
        for n in range(1, t_out):
            acc = Fraction(0)
            for k, kak in a:
                if k > n:
                    break
                acc += kak * out[n - k]
            out[n] = acc / n
        return TruncatedSeries._raw({n: x for n, x in enumerate(out) if x}, t_out)

    def derivative_D(self) -> "TruncatedSeries":
        """``q d/dq``: multiplies the coefficient of ``q**n`` by ``n``."""
        return TruncatedSeries._raw({e: e * v for e, v in self._c.items() if e}, self._trunc)

    def substitute_power(self, d: int) -> "TruncatedSeries":
        """Substitute ``q -> q**d``."""
        if d < 1:
            raise ValueError("substitution exponent must be positive")
        return TruncatedSeries._raw({d * e: v for e, v in self._c.items()}, d * self._trunc)

    def evaluate_polynomial(self, x: Scalar) -> Fraction:
        """Value at ``q = x`` of an exact Laurent polynomial."""
        if self._trunc != INF:
            raise InsufficientTruncation("only exact polynomials can be evaluated")
        x = Fraction(x)
        return sum((v * x**e for e, v in self._c.items()), Fraction(0))


# -- functional interface ----------------------------------------------------


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def invert(a: TruncatedSeries, prec: Optional[int] = None) -> TruncatedSeries:
    return a.invert(prec)


def exp_series(a: TruncatedSeries, prec: Optional[int] = None) -> TruncatedSeries:
    return a.exp(prec)


def dlog_operator(a: TruncatedSeries) -> TruncatedSeries:
    """The operator ``D = q d/dq``."""
    return a.derivative_D()


def substitute_power(a: TruncatedSeries, d: int) -> TruncatedSeries:
    return a.substitute_power(d)


def product_form(expnt: Callable[[int], int], trunc: int) -> TruncatedSeries:
    """Truncation of the infinite product ``prod_{n>=1} (1 - q**n)**expnt(n)``.

    Uses the logarithmic derivative: if ``P`` is the product then
    ``D P = P * sum_m c_m q**m`` with ``c_m = -sum_{n | m} n * expnt(n)``.
    """
    if trunc < 1:
        raise ValueError("trunc must be at least 1")
    e = [0] + [int(expnt(n)) for n in range(1, trunc)]
    c = [0] * trunc
    for n in range(1, trunc):
        if e[n]:
            for m in range(n, trunc, n):
                c[m] -= n * e[n]
    p = [0] * trunc
    p[0] = 1
    for m in range(1, trunc):
        acc = 0
        for j in range(1, m + 1):
            if c[j]:
                acc += c[j] * p[m - j]
        # integrality of the product makes this division exact
        p[m] = acc // m
    return TruncatedSeries({n: x for n, x in enumerate(p)}, trunc)


# -- two variables -------------------------------------------------------------


_EXACT_ZERO = TruncatedSeries._raw({}, INF)


class BiSeries:
    """Power series in an outer variable with :class:`TruncatedSeries` coefficients.

    ``coeffs`` maps an outer exponent to the inner series multiplying it.
    Outer exponents ``>= trunc2`` are unknown.  Inner precision may differ
    between outer coefficients; :attr:`trunc1` reports the smallest one.
    """

    __slots__ = ("_c", "_trunc2")

    def __init__(self, coeffs: Optional[Mapping[int, TruncatedSeries]] = None, trunc2: Order = INF):
        trunc2 = _check_order(trunc2)
        c: Dict[int, TruncatedSeries] = {}
        if coeffs:
            for e, s in coeffs.items():
                if e >= trunc2:
                    continue
                if _is_scalar(s):
                    s = TruncatedSeries.constant(s)
                if s.is_zero() and s.is_exact:
                    continue
                c[int(e)] = s
        self._c = c
        self._trunc2 = trunc2

    @classmethod
    def from_inner(cls, s: TruncatedSeries, trunc2: Order = INF) -> "BiSeries":
        """Embed a series in the inner variable (constant in the outer one)."""
        return cls({0: s}, trunc2)

    @classmethod
    def from_outer(cls, s: TruncatedSeries) -> "BiSeries":
        """Embed a series in the outer variable (exact constants as inner coefficients)."""
        return cls({e: TruncatedSeries.constant(v) for e, v in s.items()}, s.trunc)

    @classmethod
    def monomial(cls, outer: int, inner: int, c: Scalar = 1) -> "BiSeries":
        return cls({outer: TruncatedSeries.monomial(inner, c)})

    @property
    def trunc2(self) -> Order:
        return self._trunc2

    @property
    def trunc1(self) -> Order:
        return min((s.trunc for s in self._c.values()), default=INF)

    @property
    def outer_min(self) -> Order:
        return min(self._c) if self._c else self._trunc2

    def outer_exponents(self):
        return sorted(self._c)

    def __getitem__(self, n: int) -> TruncatedSeries:
        if n >= self._trunc2:
            raise InsufficientTruncation(
                f"outer coefficient {n} requested but only known below {self._trunc2}"
            )
        return self._c.get(n, _EXACT_ZERO)

    def coefficient(self, outer: int, inner: int) -> Fraction:
        return self[outer][inner]

    def __repr__(self) -> str:
        parts = [f"Y^{e}: {s!r}" for e, s in sorted(self._c.items())]
        return f"BiSeries({{{', '.join(parts)}}}, trunc2={self._trunc2})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self._trunc2 == other._trunc2 and self._c == other._c

    __hash__ = None

    def _coerce(self, other) -> "BiSeries":
        if isinstance(other, BiSeries):
            return other
        if isinstance(other, TruncatedSeries):
            return BiSeries.from_inner(other)
        if _is_scalar(other):
            return BiSeries({0: TruncatedSeries.constant(other)})
        raise TypeError(f"cannot combine BiSeries with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        t = min(self._trunc2, other._trunc2)
        c = {e: s for e, s in self._c.items() if e < t}
        for e, s in other._c.items():
            if e < t:
                c[e] = c[e] + s if e in c else s
        return BiSeries(c, t)

    __radd__ = __add__

    def __neg__(self):
        return BiSeries({e: -s for e, s in self._c.items()}, self._trunc2)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return BiSeries({e: s * other for e, s in self._c.items()}, self._trunc2)
        other = self._coerce(other)
        a, b = self, other
        t = min(a.outer_min + b._trunc2, b.outer_min + a._trunc2)
        c: Dict[int, TruncatedSeries] = {}
        for e1, s1 in a._c.items():
            for e2, s2 in b._c.items():
                e = e1 + e2
                if e < t:
                    p = s1 * s2
                    c[e] = c[e] + p if e in c else p
        return BiSeries(c, t)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "BiSeries":
        if n < 0:
            raise ValueError("use invert() for negative powers")
        result = BiSeries({0: TruncatedSeries.constant(1)})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def truncate(self, trunc2: Order) -> "BiSeries":
        return BiSeries(self._c, min(self._trunc2, trunc2))

    def invert(self, prec2: Optional[int] = None, prec1: Optional[int] = None) -> "BiSeries":
        """Inverse in the ring of outer power series over inner Laurent series.

        The lowest outer coefficient must be invertible as an inner series;
        ``prec1`` is forwarded to that inner inversion.
        """
        if not self._c:
            raise NonInvertibleLeading("BiSeries vanishes to working precision")
        v = min(self._c)
        try:
            inv_lead = self._c[v].invert(prec1)
        except ZeroLeadingCoefficient as exc:
            raise NonInvertibleLeading(str(exc)) from exc
        t_out = self._trunc2 - 2 * v
        if prec2 is not None:
            t_out = min(t_out, prec2)
        if t_out == INF:
            if len(self._c) == 1:
                return BiSeries({-v: inv_lead})
            raise ValueError("inverse of an exact outer polynomial is infinite; pass prec2=")
        rest = sorted((e, s) for e, s in self._c.items() if e != v)
        b: Dict[int, TruncatedSeries] = {}
        for m in range(0, t_out + v):
            acc = TruncatedSeries.constant(1) if m == 0 else _EXACT_ZERO
            for e, s in rest:
                i = e - v  # 1 <= i <= m
                if i > m:
                    break
                prev = b.get(m - i - v)
                if prev is not None:
                    acc = acc - s * prev
            b[m - v] = inv_lead * acc
        return BiSeries(b, t_out)

    def exp(self, prec2: Optional[int] = None) -> "BiSeries":
        """Exponential of a series with positive outer valuation."""
        if any(e <= 0 for e in self._c):
            raise NonzeroConstantTerm("exp needs positive outer valuation")
        t_out = self._trunc2 if prec2 is None else min(self._trunc2, prec2)
        if t_out == INF:
            if not self._c:
                return BiSeries({0: TruncatedSeries.constant(1)})
            raise ValueError("exp of an exact outer polynomial is infinite; pass prec2=")
        a = sorted(self._c.items())
        out: Dict[int, TruncatedSeries] = {0: TruncatedSeries.constant(1)}
        for n in range(1, t_out):
            acc = _EXACT_ZERO
            for k, s in a:
                if k > n:
                    break
                prev = out.get(n - k)
                if prev is not None:
                    acc = acc + (s * prev) * k
            out[n] = acc * Fraction(1, n)
        return BiSeries(out, t_out)


def bi_mul(a: BiSeries, b: BiSeries) -> BiSeries:
    return a * b


def bi_invert(a: BiSeries, prec2: Optional[int] = None, prec1: Optional[int] = None) -> BiSeries:
    return a.invert(prec2, prec1)
