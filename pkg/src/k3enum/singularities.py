"""Local invariants of plane curve singularities.

A unibranch germ ``u^p + v^q = 0`` with ``gcd(p, q) = 1`` has semigroup
``<p, q>``; its delta invariant is the number of gaps of that semigroup.
The Euler number of the associated punctual variety is
``binomial(p + q, p) / (p + q)``.

Fiber multiplicities in Euler-number counts of fibrations are
``2 delta - r + 1`` for a singular point with ``delta`` invariant ``delta``
and ``r`` branches (node 1, cusp 2, tacnode 3, ordinary triple point 4).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .arith import binomial
from .errors import NotCoprime, OutOfRange

__all__ = [
    "CoprimeGerm",
    "GermSummary",
    "euler_G",
    "delta_invariant",
    "semigroup_gaps",
    "fiber_multiplicity",
    "multibranch_euler",
    "summarize",
]


@dataclass(frozen=True)
class CoprimeGerm:
    """The germ ``u^p + v^q = 0``; ``(1, q)`` is a smooth branch."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise OutOfRange(f"exponents must be positive, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise NotCoprime(f"gcd({self.p}, {self.q}) != 1")


@dataclass(frozen=True)
class GermSummary:
    delta: int
    branches: int
    eG: int
    fiberMult: int


def _as_germ(germ) -> CoprimeGerm:
    if isinstance(germ, CoprimeGerm):
        return germ
    p, q = germ
    return CoprimeGerm(p, q)


def euler_G(germ) -> int:
    """Euler number ``binomial(p+q, p) / (p+q)`` of the punctual variety."""
    g = _as_germ(germ)
    n = g.p + g.q
    num = binomial(n, g.p)
    # divisibility holds exactly because p and q are coprime
    assert num % n == 0
    return num // n


def semigroup_gaps(p: int, q: int) -> list:
    """Positive integers not of the form ``a p + b q`` with ``a, b >= 0``."""
    g = _as_germ((p, q))
    # every integer >= (p-1)(q-1) lies in the semigroup; scan up to p*q
    bound = g.p * g.q
    reachable = [False] * (bound + 1)
    reachable[0] = True
    for n in range(1, bound + 1):
        reachable[n] = (n >= g.p and reachable[n - g.p]) or (n >= g.q and reachable[n - g.q])
    return [n for n in range(1, bound + 1) if not reachable[n]]


def delta_invariant(germ) -> int:
    """Delta invariant, computed by counting semigroup gaps."""
    g = _as_germ(germ)
    return len(semigroup_gaps(g.p, g.q))


def fiber_multiplicity(delta: int, branches: int) -> int:
    """Contribution ``2 delta - r + 1`` of a singular point to ``e(F_y) - e(F_gen)``."""
    if delta < 0 or branches < 1:
        raise OutOfRange("need delta >= 0 and branches >= 1")
    return 2 * delta - branches + 1


def multibranch_euler(branch_germs: Iterable) -> int:
    """Product of :func:`euler_G` over the branches of a germ."""
    out = 1
    for b in branch_germs:
        out *= euler_G(b)
    return out


def summarize(germ) -> GermSummary:
    g = _as_germ(germ)
    d = delta_invariant(g)
    return GermSummary(delta=d, branches=1, eG=euler_G(g), fiberMult=fiber_multiplicity(d, 1))
