"""Curve counts in primitive classes on K3 surfaces.

``N_g^p`` is the number of genus ``g`` curves through ``g`` general points in
a primitive linear system of arithmetic genus ``p``.  The generating series

    F_g(q) = sum_p N_g^p q^p = (sum_n n sigma_1(n) q^n)^g  prod_n (1 - q^n)^-24

has ``F_0`` equal to the Yau-Zaslow series ``1 + 24 q + 324 q^2 + ...``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Dict, Iterator, Optional, Tuple

from .arith import binomial
from .errors import OutOfRange
from .modular import sigma_weighted_series
from .report import Report
from .series import TruncatedSeries, product_form

__all__ = [
    "yau_zaslow_series",
    "gbl_series",
    "InvariantTable",
    "table1",
    "load_fixture",
    "lee_leung_N12",
    "gathmann_check",
    "FiberCountInput",
    "fiber_count",
    "GATHMANN_CONICS",
    "TABLE1_MAX_P",
    "TABLE1_MAX_DELTA",
]

TABLE1_MAX_P = 18
TABLE1_MAX_DELTA = 9
TABLE1_MAX_G = 9

# 5-nodal conics tangent to a general plane sextic at five points; this
# count comes from relative Gromov-Witten theory and is not computed here
GATHMANN_CONICS = 70956


def yau_zaslow_series(trunc: int) -> TruncatedSeries:
    """``prod_{n>=1} (1 - q^n)^-24`` known below ``q**trunc``."""
    if trunc < 1:
        raise OutOfRange("trunc must be >= 1")
    return product_form(lambda n: -24, trunc)


def gbl_series(g: int, trunc: int) -> TruncatedSeries:
    """``F_g``: coefficient of ``q^p`` is ``N_g^p``, known below ``q**trunc``."""
    if g < 0:
        raise OutOfRange("genus must be non-negative")
    if trunc < 1:
        raise OutOfRange("trunc must be >= 1")
    out = yau_zaslow_series(trunc)
    if g:
        out = out * sigma_weighted_series(trunc) ** g
    return out.truncate(trunc)


@dataclass
class InvariantTable:
    """Exact invariants keyed by ``(genus, divisibility, arithmetic genus)``."""

    values: Dict[Tuple[int, int, int], Fraction] = field(default_factory=dict)

    def __getitem__(self, key: Tuple[int, int, int]) -> Fraction:
        return self.values[key]

    def __contains__(self, key) -> bool:
        return key in self.values

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Tuple[int, int, int]]:
        return iter(sorted(self.values))

    def get(self, g: int, p: int, m: int = 1) -> Optional[Fraction]:
        return self.values.get((g, m, p))

    def by_delta(self, p: int, delta: int) -> Optional[Fraction]:
        """Entry in row ``p`` and column ``delta = p - g`` (primitive classes)."""
        return self.get(p - delta, p)

    def p_values(self):
        return sorted({k[2] for k in self.values})

    def to_rows(self, p_max: int) -> list:
        """Rows ``[p, N at delta=1, ..., N at delta=9]`` with ``None`` for blanks."""
        rows = []
        for p in range(1, p_max + 1):
            row = [p]
            for delta in range(1, TABLE1_MAX_DELTA + 1):
                row.append(self.by_delta(p, delta))
            rows.append(row)
        return rows

    def to_tsv(self, p_max: int) -> str:
        lines = ["p\\δ\t" + "\t".join(str(d) for d in range(1, TABLE1_MAX_DELTA + 1))]
        for row in self.to_rows(p_max):
            lines.append("\t".join("" if v is None else _fmt(v) for v in row))
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def table1(p_max: int = TABLE1_MAX_P) -> InvariantTable:
    """``N_g^p`` for ``1 <= p <= p_max``, ``1 <= p - g <= 9`` and ``0 <= g <= 9``."""
    if not 1 <= p_max <= TABLE1_MAX_P:
        raise OutOfRange(f"p_max must lie in 1..{TABLE1_MAX_P}, got {p_max}")
    table = InvariantTable()
    for g in range(0, TABLE1_MAX_G + 1):
        f = gbl_series(g, p_max + 1)
        for p in range(max(g, 1), p_max + 1):
            delta = p - g
            if 1 <= delta <= TABLE1_MAX_DELTA:
                table.values[(g, 1, p)] = f[p]
    return table


def load_fixture(name: str) -> str:
    """Text of a bundled table fixture (``table1.tsv`` or ``table2.tsv``)."""
    return resources.files("k3enum").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def parse_tsv_grid(text: str) -> Dict[Tuple[int, int], int]:
    """Parse a fixture grid into ``{(row label, column label): value}``."""
    reader = csv.reader(io.StringIO(text), delimiter="\t")
    header = next(reader)
    cols = [int(c) for c in header[1:]]
    grid = {}
    for row in reader:
        if not row:
            continue
        r = int(row[0])
        for c, cell in zip(cols, row[1:]):
            if cell.strip():
                grid[(r, c)] = int(cell)
    return grid


def lee_leung_N12(p: int) -> int:
    """Genus 1 invariant in twice a primitive class: ``N_1^(4p-3) + 2 N_1^p``."""
    if p < 1:
        raise OutOfRange("p must be >= 1")
    f1 = gbl_series(1, 4 * p - 2)
    return int(f1[4 * p - 3] + 2 * f1[p])


def gathmann_check() -> Report:
    """Rational curves in twice the primitive class of a genus 2 K3 surface.

    Sums the contributions of 5-nodal integral curves, pairs of distinct
    rational curves in the primitive class, and reducible double covers, and
    compares with the genus 0 count in genus 5.  The irreducible double
    covers contribute ``1/8`` each; removing them by the genus 0 multiple
    cover inversion recovers the same number.
    """
    from .bps import genus0_invert

    yz = yau_zaslow_series(6)
    rational_in_L = int(yz[2])
    contributions = {
        "integral_5_nodal": GATHMANN_CONICS,
        "pairs_of_rational_curves": 2 * binomial(rational_in_L, 2),
        "reducible_double_covers": 2 * rational_in_L,
    }
    total = sum(contributions.values())
    target = int(yz[5])
    irreducible_double_covers = Fraction(rational_in_L, 8)
    gw_twice_L = total + irreducible_double_covers
    instanton = genus0_invert({1: Fraction(rational_in_L), 2: gw_twice_L}, 2)[2]
    ok = total == target and instanton == target
    return Report(
        name="gathmann",
        passed=ok,
        inputs={"rational_curves_in_primitive_class": rational_in_L},
        values={
            **contributions,
            "sum": total,
            "N_0^5": target,
            "irreducible_double_covers": irreducible_double_covers,
            "N_0_2^2": gw_twice_L,
            "instanton_n_2": instanton,
        },
    )


@dataclass(frozen=True)
class FiberCountInput:
    e_total: int
    e_genfiber: int
    e_base: int


def fiber_count(data: FiberCountInput) -> int:
    """``e(X) - e(F_gen) e(C)``: the summed fiber multiplicities of a fibration."""
    return data.e_total - data.e_genfiber * data.e_base
