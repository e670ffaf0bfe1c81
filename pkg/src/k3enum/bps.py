"""Multiple-cover corrections and BPS invariants of K3 surfaces.

Genus 0 instanton numbers ``n_d`` are defined from Gromov-Witten numbers by
``N_d = sum_{k | d} n_{d/k} / k^3``.  In all genera the invariants
``R_{g,m}^p`` and the BPS numbers ``r_{g,m}^p`` are related by

    sum_{g,m} R_{g,m}^p u^(2g-2) v^m
        = sum_{g,m} r_{g,m}^p u^(2g-2) sum_{d>0} (1/d) (sin(du/2)/(u/2))^(2g-2) v^(dm).

The primitive numbers ``r_g^p = r_{g,1}^p`` are the coefficients of

    sum (-1)^g r_g^p (y^1/2 - y^-1/2)^(2g) q^p
        = prod_n (1 - q^n)^-20 (1 - y q^n)^-2 (1 - y^-1 q^n)^-2.

``u``-series are :class:`TruncatedSeries` whose exponents count powers of ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Mapping, Optional, Tuple

from .arith import bernoulli, bernoulli_signed, divisors, moebius
from .errors import BasisChangeResidual, OutOfRange
from .k3counts import yau_zaslow_series
from .modular import delta_normalized, eisenstein
from .series import BiSeries, TruncatedSeries, product_form

__all__ = [
    "genus0_forward",
    "genus0_invert",
    "bps_kernel",
    "bps_forward",
    "bps_invert",
    "YLaurentTable",
    "kkv_product",
    "RTable",
    "kkv_table",
    "kkv_y1_check",
    "mpt_series",
    "mpt_exponent_coefficient",
    "calibrate_mpt",
    "BERNOULLI_CONVENTIONS",
    "QUINTIC_INSTANTONS",
    "QUINTIC_PLANE_QUINTICS",
    "quintic_degree10",
]

# instanton numbers of the general quintic threefold in degrees 1, 2, 5, 10
QUINTIC_INSTANTONS = {
    1: 2875,
    2: 609250,
    5: 229305888887625,
    10: 704288164978454686113488249750,
}
# 6-nodal plane quintic sections (rational curves of degree 5 in a plane)
QUINTIC_PLANE_QUINTICS = 17601000


# -- genus 0 -------------------------------------------------------------------


def genus0_forward(n: Mapping[int, Fraction], D: int) -> Dict[int, Fraction]:
    """``N_d = sum_{k | d} n_{d/k} / k^3`` for ``1 <= d <= D`` (missing ``n`` are 0)."""
    return {
        d: sum((Fraction(n.get(d // k, 0), k**3) for k in divisors(d)), Fraction(0))
        for d in range(1, D + 1)
    }


def genus0_invert(N: Mapping[int, Fraction], D: int) -> Dict[int, Fraction]:
    """``n_d = sum_{k | d} mu(k) N_{d/k} / k^3`` for ``1 <= d <= D``."""
    return {
        d: sum((Fraction(moebius(k) * N.get(d // k, 0), k**3) for k in divisors(d)), Fraction(0))
        for d in range(1, D + 1)
    }


def quintic_degree10() -> Dict[str, Fraction]:
    """Degree 10 Gromov-Witten number of the quintic from its instanton numbers."""
    n = {d: Fraction(v) for d, v in QUINTIC_INSTANTONS.items()}
    N10 = genus0_forward(n, 10)[10]
    return {
        "N_10": N10,
        "n_10": n[10],
        "n_10_without_double_plane_quintics": n[10] - 6 * QUINTIC_PLANE_QUINTICS,
    }


# -- all-genus kernel ------------------------------------------------------------


def _sinc_series(d: int, trunc: int) -> TruncatedSeries:
    # sin(x)/x at x = d u / 2, as a series in u
    coeffs = {}
    for n in range(0, (trunc + 1) // 2 + 1):
        if 2 * n < trunc:
            coeffs[2 * n] = Fraction((-1) ** n * d ** (2 * n), 2 ** (2 * n) * factorial(2 * n + 1))
    return TruncatedSeries(coeffs, trunc)


def bps_kernel(g: int, d: int, u_trunc: int) -> TruncatedSeries:
    """``u^(2g-2) (1/d) (sin(du/2)/(u/2))^(2g-2)`` known below ``u**u_trunc``."""
    if g < 0 or d < 1:
        raise OutOfRange("need g >= 0 and d >= 1")
    shift = 2 * g - 2
    if u_trunc <= shift:
        return TruncatedSeries.zero(u_trunc)
    # sin(du/2)/(u/2) = d * S(du/2) with S(x) = sin(x)/x
    s = _sinc_series(d, u_trunc - shift) ** shift
    return (s * Fraction(d) ** (2 * g - 3)).shift(shift)


def _kernel_table(g_max: int, d_max: int) -> Dict[Tuple[int, int], TruncatedSeries]:
    return {
        (g, d): bps_kernel(g, d, 2 * g_max - 1)
        for g in range(g_max + 1)
        for d in range(1, d_max + 1)
    }


def bps_forward(r: Mapping[Tuple[int, int, int], Fraction], p_max: int, m_max: int, g_max: int) -> Dict[Tuple[int, int, int], Fraction]:
    """``R_{g,m}^p`` from ``r_{g,m}^p`` for ``g <= g_max``, ``m <= m_max``, ``p <= p_max``.

    ``r`` maps ``(g, m, p)`` to a value; missing keys count as 0.
    """
    kern = _kernel_table(g_max, m_max)
    out = {}
    for p in range(p_max + 1):
        for m in range(1, m_max + 1):
            for g in range(g_max + 1):
                total = Fraction(0)
                for m1 in divisors(m):
                    d = m // m1
                    for g1 in range(g + 1):
                        val = r.get((g1, m1, p), 0)
                        if val:
                            total += val * kern[(g1, d)][2 * g - 2]
                out[(g, m, p)] = total
    return out


def bps_invert(R: Mapping[Tuple[int, int, int], Fraction], p_max: int, m_max: int, g_max: int) -> Dict[Tuple[int, int, int], Fraction]:
    """Inverse of :func:`bps_forward` by a triangular solve in ``(m, g)``."""
    kern = _kernel_table(g_max, m_max)
    r: Dict[Tuple[int, int, int], Fraction] = {}
    for p in range(p_max + 1):
        for m in range(1, m_max + 1):
            for g in range(g_max + 1):
                rest = Fraction(0)
                for m1 in divisors(m):
                    d = m // m1
                    for g1 in range(g + 1):
                        if (m1, g1) == (m, g):
                            continue
                        val = r.get((g1, m1, p), 0)
                        if val:
                            rest += val * kern[(g1, d)][2 * g - 2]
                # the diagonal kernel coefficient is 1
                r[(g, m, p)] = Fraction(R.get((g, m, p), 0)) - rest
    return r


# -- the KKV product ---------------------------------------------------------------


class YLaurentTable:
    """Coefficients ``q^p -> {y exponent: integer}`` of a series in ``q`` over ``Z[y, 1/y]``."""

    __slots__ = ("rows",)

    def __init__(self, rows: List[Dict[int, int]]):
        self.rows = [{e: c for e, c in row.items() if c} for row in rows]

    @property
    def p_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, p: int) -> Dict[int, int]:
        return self.rows[p]

    def __mul__(self, other: "YLaurentTable") -> "YLaurentTable":
        n = min(len(self.rows), len(other.rows))
        out: List[Dict[int, int]] = [dict() for _ in range(n)]
        for p1 in range(n):
            r1 = self.rows[p1]
            if not r1:
                continue
            for p2 in range(n - p1):
                r2 = other.rows[p2]
                tgt = out[p1 + p2]
                for e1, c1 in r1.items():
                    for e2, c2 in r2.items():
                        tgt[e1 + e2] = tgt.get(e1 + e2, 0) + c1 * c2
        return YLaurentTable(out)

    def is_symmetric(self) -> bool:
        return all(row.get(-e, 0) == c for row in self.rows for e, c in row.items())

    def span_ok(self) -> bool:
        return all(abs(e) <= p for p, row in enumerate(self.rows) for e in row)

    def at_y1(self) -> List[int]:
        return [sum(row.values()) for row in self.rows]


def _geometric_power_factor(n: int, y_exp: int, p_max: int) -> YLaurentTable:
    # (1 - y^y_exp q^n)^-2 = sum_j (j+1) y^(j*y_exp) q^(n j)
    rows: List[Dict[int, int]] = [dict() for _ in range(p_max + 1)]
    j = 0
    while n * j <= p_max:
        rows[n * j][j * y_exp] = j + 1
        j += 1
    return YLaurentTable(rows)


def kkv_product(p_max: int) -> YLaurentTable:
    """``prod_n (1-q^n)^-20 (1-yq^n)^-2 (1-q^n/y)^-2`` through ``q^p_max``."""
    if p_max < 0:
        raise OutOfRange("p_max must be >= 0")
    base = product_form(lambda n: -20, p_max + 1)
    table = YLaurentTable([{0: int(base[p])} for p in range(p_max + 1)])
    for n in range(1, p_max + 1):
        table = table * _geometric_power_factor(n, 1, p_max)
        table = table * _geometric_power_factor(n, -1, p_max)
    return table


def _s_power(g: int) -> Dict[int, int]:
    # (y - 2 + 1/y)^g = (y^1/2 - y^-1/2)^(2g)
    out = {0: 1}
    for _ in range(g):
        nxt: Dict[int, int] = {}
        for e, c in out.items():
            for de, dc in ((1, 1), (0, -2), (-1, 1)):
                nxt[e + de] = nxt.get(e + de, 0) + c * dc
        out = nxt
    return out


def _to_s_basis(poly: Dict[int, int], span: int) -> Dict[int, int]:
    rest = {e: c for e, c in poly.items() if c}
    coeffs = {}
    for g in range(span, -1, -1):
        c = rest.get(g, 0)
        if c:
            coeffs[g] = c
            for e, v in _s_power(g).items():
                w = rest.get(e, 0) - c * v
                if w:
                    rest[e] = w
                else:
                    rest.pop(e, None)
    if rest:
        raise BasisChangeResidual(f"residual {rest} after expanding in powers of y - 2 + 1/y")
    return coeffs


@dataclass
class RTable:
    """BPS numbers ``r_{g,m}^p`` keyed by ``(g, m, p)``."""

    values: Dict[Tuple[int, int, int], Fraction] = field(default_factory=dict)
    p_max: int = 0

    def get(self, g: int, p: int, m: int = 1) -> Fraction:
        return self.values.get((g, m, p), Fraction(0))

    def __getitem__(self, key: Tuple[int, int, int]) -> Fraction:
        return self.values.get(key, Fraction(0))

    def to_tsv(self, p_max: Optional[int] = None) -> str:
        """Rows ``g``, columns ``p``; cells with ``g > p`` are left empty."""
        p_max = self.p_max if p_max is None else p_max
        lines = ["g\\p\t" + "\t".join(str(p) for p in range(p_max + 1))]
        for g in range(p_max + 1):
            cells = [str(g)]
            for p in range(p_max + 1):
                if g > p:
                    cells.append("")
                else:
                    v = self.get(g, p)
                    cells.append(str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}")
            lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"


def kkv_table(p_max: int, m_max: int = 1) -> RTable:
    """``r_{g,m}^p`` for ``p <= p_max`` from the KKV product.

    Imprimitive entries (``m >= 2``) are filled by the divisibility
    independence ``r_{g,m}^p = r_{g,1}^(m^2 p - m^2 + 1)``, which needs the
    product to much higher order.
    """
    if p_max < 0:
        raise OutOfRange("p_max must be >= 0")
    need = p_max if m_max == 1 else m_max * m_max * (p_max - 1) + 1
    need = max(need, p_max)
    prod_table = kkv_product(need)
    prim: Dict[Tuple[int, int], Fraction] = {}
    for p in range(need + 1):
        for g, a in _to_s_basis(prod_table[p], p).items():
            prim[(g, p)] = Fraction((-1) ** g * a)
    values = {}
    for (g, p), v in prim.items():
        if p <= p_max:
            values[(g, 1, p)] = v
    for m in range(2, m_max + 1):
        for p in range(1, p_max + 1):
            pp = m * m * p - m * m + 1
            for g in range(pp + 1):
                v = prim.get((g, pp), Fraction(0))
                if v:
                    values[(g, m, p)] = v
    return RTable(values, p_max)


def kkv_y1_check(p_max: int) -> bool:
    """The KKV product at ``y = 1`` equals the Yau-Zaslow series through ``q^p_max``."""
    at1 = kkv_product(p_max).at_y1()
    yz = yau_zaslow_series(p_max + 1)
    return all(at1[p] == yz[p] for p in range(p_max + 1))


# -- point insertions ------------------------------------------------------------------

BERNOULLI_CONVENTIONS = ("positive", "signed")


def mpt_exponent_coefficient(g: int, convention: str = "positive") -> Fraction:
    """``B_2g / (g (2g)!)`` with ``B_2g`` read in the given sign convention.

    ``positive`` takes ``|B_2g|`` (``1/6, 1/30, 1/42, ...``); ``signed`` takes
    the standard ``B_2g`` (``1/6, -1/30, 1/42, ...``).
    """
    if g < 1:
        raise OutOfRange("g must be >= 1")
    if convention == "positive":
        b = bernoulli(g)
    elif convention == "signed":
        b = bernoulli_signed(2 * g)
    else:
        raise ValueError(f"unknown Bernoulli convention {convention!r}")
    return b / (g * factorial(2 * g))


def _point_factor(u_trunc: int, q_trunc: int) -> BiSeries:
    # sum_m q^m sum_{d | m} (m/d) (2 sin(du/2))^2, outer variable u
    # (2 sin(x/2))^2 = 2 - 2 cos x = sum_{n>=1} 2 (-1)^(n+1) x^(2n) / (2n)!
    coeffs = {}
    for n in range(1, (u_trunc + 1) // 2 + 1):
        if 2 * n >= u_trunc:
            break
        c = Fraction(2 * (-1) ** (n + 1), factorial(2 * n))
        inner = {m: c * sum((m // d) * d ** (2 * n) for d in divisors(m)) for m in range(1, q_trunc)}
        coeffs[2 * n] = TruncatedSeries(inner, q_trunc)
    return BiSeries(coeffs, u_trunc)


def mpt_series(k: int, g_max: int, p_max: int, convention: str = "positive") -> Dict[Tuple[int, int], Fraction]:
    """``R_{g,k,1}^p`` for ``g <= g_max`` and ``p <= p_max``.

    Expands ``(q/(u^2 delta)) exp(sum_g u^(2g) c_g E_g(q)) (point factor)^k``
    with ``c_g`` from :func:`mpt_exponent_coefficient`.  The coefficient of
    ``u^(2g-2) q^p`` is returned.
    """
    if k < 0 or g_max < 0 or p_max < 0:
        raise OutOfRange("k, g_max and p_max must be non-negative")
    u_trunc = 2 * g_max + 1  # need u^0 .. u^(2 g_max) before dividing by u^2
    q_trunc = p_max + 1
    exponent = BiSeries(
        {
            2 * g: eisenstein(g, q_trunc) * mpt_exponent_coefficient(g, convention)
            for g in range(1, g_max + 1)
        },
        u_trunc,
    )
    total = exponent.exp()
    q_over_delta = delta_normalized(q_trunc + 1).invert().shift(1).truncate(q_trunc)
    total = total * BiSeries.from_inner(q_over_delta)
    if k:
        total = total * (_point_factor(u_trunc, q_trunc) ** k)
    out = {}
    for g in range(g_max + 1):
        row = total[2 * g]
        for p in range(p_max + 1):
            out[(g, p)] = row[p]
    return out


def calibrate_mpt(g_max: int = 3, p_max: int = 5) -> Dict[str, bool]:
    """Which Bernoulli conventions make the ``k = 0`` series match the KKV side."""
    r = kkv_table(p_max).values
    R = bps_forward(r, p_max, 1, g_max)
    verdict = {}
    for conv in BERNOULLI_CONVENTIONS:
        mpt = mpt_series(0, g_max, p_max, conv)
        verdict[conv] = all(mpt[(g, p)] == R[(g, 1, p)] for g in range(g_max + 1) for p in range(p_max + 1))
    return verdict
