"""Noether-Lefschetz numbers of the STU model and the genus 0 consistency checks.

The STU model is a K3-fibred threefold whose fibres carry the lattice
``[[0, 1], [1, 0]]``.  The Noether-Lefschetz number attached to a class of
arithmetic genus ``p`` and degrees ``(d1, d2)`` is the coefficient of
``q^(Delta/2)`` in ``-4 E_2 E_3``, where

    Delta(p, d1, d2) = det [[0, 1, d1], [1, 0, d2], [d1, d2, 2p - 2]] = 2 (d1 d2 - p + 1).

The genus 0 fibre-class invariants ``N_(d1,d2)`` of the threefold are read
off from

    sum d2^3 N_(d1,d2) q1^d1 q2^d2 = -2 + 2 f(q1) E_2(q2) / (j(q1) - j(q2))

with ``f = E_2 E_3 / delta``.  The right side is a two-variable series whose
expansion depends on a choice of domain:

``"q2<q1"``
    outer variable ``q2``, inner ``q1``: the region ``|q2| < |q1|``.
``"q1<q2"``
    outer variable ``q1``, inner ``q2``: the region ``|q1| < |q2|``.

The rational term of the product formula for ``f(q1) E_2(q2)/(j(q1)-j(q2))``
is ``q1/(q2 - q1)``; :func:`harvey_moore_check` can also test the variant
``q1/(q1 - q2)`` to show that it fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Optional, Tuple

from .arith import divisors
from .errors import DivisionByZeroDegree, InsufficientTruncation, NotCoprime, OutOfRange
from .k3counts import FiberCountInput, fiber_count, yau_zaslow_series
from .modular import eisenstein, f_series, j_normalized
from .report import Report
from .series import BiSeries, TruncatedSeries

__all__ = [
    "NLQuery",
    "STU_GRAM",
    "DOMAINS",
    "RATIONAL_SIGNS",
    "det3",
    "discriminant_delta",
    "nl_number",
    "kml_series",
    "kml_right_side",
    "harvey_moore_sides",
    "harvey_moore_check",
    "harvey_moore_report",
    "yz_pipeline_value",
    "yz_pipeline_check",
    "yz_pipeline_suite",
    "stu_fiber_checks",
    "PIPELINE_DEGREES",
]

STU_GRAM = ((0, 1), (1, 0))
DOMAINS = ("q2<q1", "q1<q2")
# denominator of the rational term q1/(...) in the Harvey-Moore product
RATIONAL_SIGNS = ("q2-q1", "q1-q2")
PIPELINE_DEGREES = ((1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3))


@dataclass(frozen=True)
class NLQuery:
    p: int
    d1: int
    d2: int


def det3(m) -> int:
    """Determinant of a 3x3 integer matrix by cofactor expansion along the first row."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def discriminant_delta(q: NLQuery) -> int:
    (l11, l12), (l21, l22) = STU_GRAM
    gram = (
        (l11, l12, q.d1),
        (l21, l22, q.d2),
        (q.d1, q.d2, 2 * q.p - 2),
    )
    return det3(gram)


def _nl_form(trunc: int) -> TruncatedSeries:
    return (eisenstein(2, trunc) * eisenstein(3, trunc)) * -4


def nl_number(q: NLQuery, trunc: Optional[int] = None, include_delta_zero: bool = True) -> int:
    """Coefficient of ``q^(Delta/2)`` in ``-4 E_2 E_3`` (0 when ``Delta < 0``).

    ``include_delta_zero=False`` sets the ``Delta = 0`` value to 0 instead of
    the constant term ``-4``.
    """
    delta = discriminant_delta(q)
    if delta < 0:
        return 0
    if delta == 0 and not include_delta_zero:
        return 0
    h = delta // 2
    if trunc is None:
        trunc = h + 1
    if h >= trunc:
        raise InsufficientTruncation(f"need trunc > {h}, got {trunc}")
    return int(_nl_form(trunc)[h])


# -- two-variable series ------------------------------------------------------------


def _check_domain(domain: str) -> None:
    if domain not in DOMAINS:
        raise ValueError(f"domain must be one of {DOMAINS}, got {domain!r}")


def _outer(s: TruncatedSeries) -> BiSeries:
    return BiSeries.from_outer(s)


def _inner(s: TruncatedSeries) -> BiSeries:
    return BiSeries.from_inner(s)


def _lhs_parts(domain: str, t1: int, t2: int, f: TruncatedSeries):
    """``f(q1)``, ``E_2(q2)``, ``j(q1) - j(q2)`` as two-variable series."""
    if domain == "q2<q1":
        # outer q2, inner q1
        f1 = _inner(f)
        e2 = _outer(eisenstein(2, t2))
        jdiff = _inner(j_normalized(t1)) - _outer(j_normalized(t2))
    else:
        f1 = _outer(f)
        e2 = _inner(eisenstein(2, t1))
        jdiff = _outer(j_normalized(t2)) - _inner(j_normalized(t1))
    return f1, e2, jdiff


def _lhs(domain: str, t1: int, t2: int, f: TruncatedSeries) -> BiSeries:
    f1, e2, jdiff = _lhs_parts(domain, t1, t2, f)
    return f1 * e2 * jdiff.invert()


def kml_right_side(d1_max: int, d2_max: int, domain: str = "q2<q1") -> BiSeries:
    """``-2 + 2 f(q1) E_2(q2) / (j(q1) - j(q2))`` in the chosen domain."""
    _check_domain(domain)
    # j has a simple pole, and each outer order of the inverse costs one
    # inner order; pad the inner precision accordingly
    if domain == "q2<q1":
        t_out, t_in = d2_max + 1, d1_max + d2_max + 4
    else:
        t_out, t_in = d1_max + 1, d2_max + d1_max + 4
    f = f_series(t_in if domain == "q2<q1" else t_out + 2)
    lhs = _lhs(domain, t_in, t_out + 2, f).truncate(t_out)
    return lhs * 2 - 2


def _coefficient(bi: BiSeries, domain: str, d1: int, d2: int) -> Fraction:
    if domain == "q2<q1":
        return bi[d2][d1]
    return bi[d1][d2]


def kml_series(d1_max: int, d2_max: int, domain: str = "q2<q1", d2_min: int = 1, d1_min: int = 0) -> Dict[Tuple[int, int], Fraction]:
    """Genus 0 fibre-class invariants ``N_(d1,d2)`` on a rectangular window.

    Returns ``{(d1, d2): N}`` for ``d1_min <= d1 <= d1_max`` and
    ``d2_min <= d2 <= d2_max``.  ``d2 = 0`` cannot be extracted because of
    the ``d2^3`` weight.  Negative ``d2`` only occurs in the domain
    ``"q1<q2"``, where the expansion is Laurent in ``q2``.
    """
    _check_domain(domain)
    if d2_min <= 0 <= d2_max:
        raise DivisionByZeroDegree("the coefficient at d2 = 0 carries the factor d2^3 = 0")
    if d2_min < 0 and domain == "q2<q1":
        raise OutOfRange("negative d2 is not representable with q2 as the outer power-series variable")
    if d1_min < 0:
        raise OutOfRange("d1 must be non-negative")
    rhs = kml_right_side(d1_max, max(d2_max, 1), domain)
    out = {}
    for d1 in range(d1_min, d1_max + 1):
        for d2 in range(d2_min, d2_max + 1):
            out[(d1, d2)] = _coefficient(rhs, domain, d1, d2) / d2**3
    return out


# -- the Harvey-Moore identity --------------------------------------------------------


def _rational_term(domain: str, t1: int, t2: int, sign: str) -> BiSeries:
    # q1/(q2 - q1) ("q2-q1") or q1/(q1 - q2) ("q1-q2")
    s = 1 if sign == "q1-q2" else -1
    coeffs = {}
    if domain == "q2<q1":
        # q1/(q1 - q2) = sum_{n>=0} q2^n q1^-n
        for n in range(t2):
            coeffs[n] = TruncatedSeries.monomial(-n, s)
    else:
        # q1/(q1 - q2) = -sum_{n>=1} q1^n q2^-n
        for n in range(1, t2):
            coeffs[n] = TruncatedSeries.monomial(-n, -s)
    return BiSeries(coeffs, t2)


def harvey_moore_sides(trunc1: int, trunc2: int, f: Optional[TruncatedSeries] = None, domain: str = "q2<q1", rational_sign: str = "q2-q1") -> Tuple[BiSeries, BiSeries]:
    """Both sides of the product formula for ``f(q1) E_2(q2) / (j(q1) - j(q2))``.

    The right side is ``q1/(q2 - q1) + E_2(q2) - sum_{d,k,l>0} l^3 c(kl) q1^(kd) q2^(ld)``
    where ``c(n)`` are the coefficients of ``f``.  ``rational_sign="q1-q2"``
    replaces the first term by ``q1/(q1 - q2)``, which breaks the identity.
    """
    _check_domain(domain)
    if rational_sign not in RATIONAL_SIGNS:
        raise ValueError(f"rational_sign must be one of {RATIONAL_SIGNS}")
    # work with generous inner precision so the compared window is exact
    pad = trunc1 + trunc2 + 4
    if f is None:
        # the double sum reaches c(kl) with kl up to (trunc1 - 1)(trunc2 - 1)
        f = f_series(max(pad, (trunc1 - 1) * (trunc2 - 1) + 1))
    lhs = _lhs(domain, pad, trunc2 + 2, f.truncate(pad)).truncate(trunc2)
    e2_q2 = eisenstein(2, pad)
    if domain == "q2<q1":
        e2_part = _outer(e2_q2.truncate(trunc2))
    else:
        e2_part = _inner(e2_q2)
    # outer exponent ranges below trunc2 and inner below trunc1; in the
    # domain "q2<q1" the outer variable is q2 = q^(ld)
    rows: Dict[int, Dict[int, Fraction]] = {}
    for outer in range(1, trunc2):
        row = {}
        for inner in range(1, trunc1):
            kd, ld = (inner, outer) if domain == "q2<q1" else (outer, inner)
            total = Fraction(0)
            for d in divisors(gcd(kd, ld)):
                k, l = kd // d, ld // d
                total += l**3 * f[k * l]
            row[inner] = -total
        rows[outer] = row
    correction = BiSeries({o: TruncatedSeries(r, trunc1) for o, r in rows.items()}, trunc2)
    rhs = _rational_term(domain, pad, trunc2, rational_sign) + e2_part + correction
    return lhs, rhs


def _window_mismatches(lhs: BiSeries, rhs: BiSeries, trunc1: int, trunc2: int, inner_min: int):
    bad = []
    for outer in range(min(lhs.outer_min, rhs.outer_min, 0), trunc2):
        a, b = lhs[outer], rhs[outer]
        for inner in range(inner_min, trunc1):
            if a[inner] != b[inner]:
                bad.append((outer, inner, a[inner], b[inner]))
    return bad


def harvey_moore_report(trunc1: int = 8, trunc2: int = 8, f: Optional[TruncatedSeries] = None, domain: str = "q2<q1", rational_sign: str = "q2-q1") -> Report:
    """Compare the two sides on outer exponents below ``trunc2`` and inner below ``trunc1``.

    All inner exponents from ``-trunc2`` up are compared, which covers every
    Laurent term the expansion can produce in the window.
    """
    if trunc1 < 2 or trunc2 < 2:
        raise OutOfRange("trunc1 and trunc2 must be >= 2")
    lhs, rhs = harvey_moore_sides(trunc1, trunc2, f, domain, rational_sign)
    bad = _window_mismatches(lhs, rhs, trunc1, trunc2, -trunc2 - 1)
    values = {"mismatches": len(bad)}
    if bad:
        o, i, a, b = bad[0]
        values["first_mismatch"] = {"outer": o, "inner": i, "lhs": a, "rhs": b}
    return Report(
        name="harvey-moore",
        passed=not bad,
        inputs={"trunc1": trunc1, "trunc2": trunc2, "domain": domain, "rational_term": rational_sign},
        values=values,
    )


def harvey_moore_check(trunc1: int = 8, trunc2: int = 8, f: Optional[TruncatedSeries] = None, domain: str = "q2<q1", rational_sign: str = "q2-q1") -> bool:
    return harvey_moore_report(trunc1, trunc2, f, domain, rational_sign).passed


# -- genus 0 Yau-Zaslow pipeline ------------------------------------------------------


def yz_pipeline_value(d1: int, d2: int, include_delta_zero: bool = True) -> int:
    """``sum_p N_0^p NL_(p,d1,d2)`` over the ``p`` with non-negative discriminant."""
    p_top = d1 * d2 + 1
    yz = yau_zaslow_series(p_top + 1)
    total = 0
    for p in range(0, p_top + 1):
        total += int(yz[p]) * nl_number(NLQuery(p, d1, d2), include_delta_zero=include_delta_zero)
    return total


def yz_pipeline_check(d1: int, d2: int, calibration: Optional[Fraction] = None, domain: str = "q2<q1", include_delta_zero: bool = True) -> Report:
    """Compare ``2 N_(d1,d2)`` with the Noether-Lefschetz sum for coprime degrees.

    The ratio ``2 N / (NL sum)`` is reported; the check passes when it equals
    ``calibration`` (by default the ratio at ``(1, 1)``).
    """
    if d1 < 1 or d2 < 1:
        raise OutOfRange("degrees must be positive")
    if gcd(d1, d2) != 1:
        raise NotCoprime(f"gcd({d1}, {d2}) != 1")
    if calibration is None:
        calibration = _pipeline_ratio(1, 1, domain, include_delta_zero)
    lhs = 2 * kml_series(d1, d2, domain, d2_min=d2, d1_min=d1)[(d1, d2)]
    rhs = yz_pipeline_value(d1, d2, include_delta_zero)
    ratio = lhs / rhs if rhs else None
    return Report(
        name="yz-pipeline",
        passed=ratio is not None and ratio == calibration,
        inputs={"d1": d1, "d2": d2, "domain": domain},
        values={"lhs_2N": lhs, "rhs_nl_sum": rhs, "ratio": ratio, "calibration": calibration},
    )


def _pipeline_ratio(d1: int, d2: int, domain: str, include_delta_zero: bool) -> Fraction:
    lhs = 2 * kml_series(d1, d2, domain, d2_min=d2, d1_min=d1)[(d1, d2)]
    return lhs / yz_pipeline_value(d1, d2, include_delta_zero)


def yz_pipeline_suite(degrees=PIPELINE_DEGREES, domain: str = "q2<q1", include_delta_zero: bool = True) -> Report:
    """Run the pipeline check on several coprime degrees with one shared constant."""
    calibration = _pipeline_ratio(1, 1, domain, include_delta_zero)
    reports = [yz_pipeline_check(d1, d2, calibration, domain, include_delta_zero) for d1, d2 in degrees]
    return Report(
        name="yz-pipeline",
        passed=all(r.passed for r in reports),
        inputs={"degrees": [list(d) for d in degrees], "domain": domain},
        values={
            "calibration": calibration,
            "cases": [dict(r.to_dict()["values"], d1=str(r.inputs["d1"]), d2=str(r.inputs["d2"]), status=r.status) for r in reports],
        },
    )


def stu_fiber_checks() -> Report:
    """Singular fibre counts of an elliptic K3 (24) and of the STU model (528)."""
    elliptic = fiber_count(FiberCountInput(e_total=24, e_genfiber=0, e_base=2))
    stu_raw = fiber_count(FiberCountInput(e_total=-480, e_genfiber=24, e_base=2))
    stu = -stu_raw
    return Report(
        name="fiber-count",
        passed=elliptic == 24 and stu == 528,
        inputs={"elliptic_k3": [24, 0, 2], "stu": [-480, 24, 2]},
        values={"elliptic_k3_singular_fibres": elliptic, "stu_raw": stu_raw, "stu_singular_fibres": stu},
    )
