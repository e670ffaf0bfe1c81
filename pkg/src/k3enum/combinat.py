"""Admissible sequences, blow-up invariants of the plane, and partition sums.

An admissible sequence of weight ``a`` is a tuple ``(k_-a, ..., k_0, ..., k_a)``
of non-negative integers whose positive entries form a contiguous block
containing index 0 and sum to ``a``.  (The weight equals ``sum k_l``: the
exceptional curve over a rational tail is counted with multiplicity
``k_s`` on the ``s``-th component, and the whole configuration pushes
forward to ``a`` times the rational curve.)

Each sequence determines a class ``d H - sum alpha_i E_i`` on a blow-up of
the plane; :func:`blowup_eval` evaluates its genus 0 invariant with the
rewriting rules

* ``N(1) = 1`` and ``N(d; d - 1) = 1``;
* multiplicities 0 and 1 may be dropped, and the order is irrelevant (a
  multiplicity 1 is the same as a point condition, so one may also be
  added back while the expected dimension stays non-negative);
* a negative multiplicity forces 0, except for an exceptional class
  ``E_i`` (``d = 0`` and a single multiplicity ``-1``), which gives 1;
* the Cremona move on a triple ``(i, j, k)``:
  ``d' = 2d - a_i - a_j - a_k`` and ``a_i' = d - a_j - a_k`` (and cyclically).

In addition a class whose expected dimension ``3d - 1 - sum alpha`` is
negative has invariant 0.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import factorial, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .arith import partition_count, sigma
from .errors import OutOfRange

__all__ = [
    "AdmissibleSequence",
    "BlowupClass",
    "UNDECIDED",
    "enumerate_admissible",
    "is_pyramidal",
    "partitions",
    "young_bijection",
    "class_of_sequence",
    "cremona",
    "normalize_class",
    "blowup_eval",
    "gbl_contribution",
    "gbl_brute_force",
]

UNDECIDED = "undecided"

BlowupValue = Union[int, str]


@dataclass(frozen=True)
class AdmissibleSequence:
    """``k[i]`` holds ``k_{i - a}``, so ``k[a]`` is the central entry ``k_0``."""

    a: int
    k: Tuple[int, ...]

    def __post_init__(self):
        if self.a < 1:
            raise OutOfRange("weight must be >= 1")
        if len(self.k) != 2 * self.a + 1:
            raise OutOfRange(f"need {2 * self.a + 1} entries, got {len(self.k)}")
        if any(x < 0 for x in self.k):
            raise OutOfRange("entries must be non-negative")
        if sum(self.k) != self.a:
            raise OutOfRange("entries must sum to the weight")
        support = [i for i, x in enumerate(self.k) if x > 0]
        if self.k[self.a] == 0 or support != list(range(support[0], support[-1] + 1)):
            raise OutOfRange("positive entries must be contiguous and contain index 0")

    def at(self, s: int) -> int:
        """``k_s``, zero outside ``-a..a``."""
        if -self.a <= s <= self.a:
            return self.k[s + self.a]
        return 0

    @property
    def k0(self) -> int:
        return self.k[self.a]

    @classmethod
    def from_dict(cls, a: int, entries: Dict[int, int]) -> "AdmissibleSequence":
        return cls(a, tuple(entries.get(s, 0) for s in range(-a, a + 1)))

    def as_dict(self) -> Dict[int, int]:
        return {s: self.at(s) for s in range(-self.a, self.a + 1) if self.at(s)}


@dataclass(frozen=True)
class BlowupClass:
    """The class ``d H - sum alpha_i E_i``."""

    d: int
    alphas: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))

    @property
    def expected_dimension(self) -> int:
        return 3 * self.d - 1 - sum(self.alphas)


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` positive integers."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_admissible(a: int) -> List[AdmissibleSequence]:
    """All admissible sequences of weight ``a``, each once, in a fixed order."""
    if a < 1:
        raise OutOfRange("weight must be >= 1")
    out = []
    for length in range(1, a + 1):
        for m in range(length):  # support is [-m, length - 1 - m]
            for comp in _compositions(a, length):
                k = [0] * (2 * a + 1)
                for i, v in enumerate(comp):
                    k[a - m + i] = v
                out.append(AdmissibleSequence(a, tuple(k)))
    return out


def is_pyramidal(s: AdmissibleSequence) -> bool:
    """1-pyramidal: entries step down by 0 or 1 moving away from the center."""
    for t in range(s.a):
        if not (s.at(t) - 1 <= s.at(t + 1) <= s.at(t)):
            return False
        if not (s.at(-t) - 1 <= s.at(-t - 1) <= s.at(-t)):
            return False
    return True


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def young_bijection(a: int) -> Dict[Tuple[int, ...], AdmissibleSequence]:
    """Map each partition of ``a`` to its diagonal counts.

    Row ``y`` of the diagram holds boxes ``(x, y)`` for ``x < lambda_y``;
    ``k_s`` counts the boxes with ``y - x = s``.
    """
    if a < 1:
        raise OutOfRange("weight must be >= 1")
    out = {}
    for lam in partitions(a):
        diag = Counter(y - x for y, row in enumerate(lam) for x in range(row))
        out[lam] = AdmissibleSequence.from_dict(a, dict(diag))
    return out


def class_of_sequence(s: AdmissibleSequence) -> BlowupClass:
    """The blow-up class attached to an admissible sequence.

    Multiplicities, in order: ``k_0 - 1``, ``k_-a``, the successive
    differences ``k_{t+1} - k_t`` for ``t = -a .. -1``, the differences
    ``k_t - k_{t+1}`` for ``t = 0 .. a-1``, and ``k_a``.
    """
    a = s.a
    alphas = [s.k0 - 1, s.at(-a)]
    alphas += [s.at(t + 1) - s.at(t) for t in range(-a, 0)]
    alphas += [s.at(t) - s.at(t + 1) for t in range(0, a)]
    alphas.append(s.at(a))
    return BlowupClass(s.k0, tuple(alphas))


def cremona(c: BlowupClass, triple: Tuple[int, int, int]) -> BlowupClass:
    """Cremona move on three distinct multiplicity positions."""
    i, j, k = triple
    if len({i, j, k}) != 3:
        raise OutOfRange("Cremona needs three distinct positions")
    al = list(c.alphas)
    ai, aj, ak = al[i], al[j], al[k]
    al[i], al[j], al[k] = c.d - aj - ak, c.d - ai - ak, c.d - ai - aj
    return BlowupClass(2 * c.d - ai - aj - ak, tuple(al))


def normalize_class(c: BlowupClass) -> BlowupClass:
    """Drop multiplicities 0 and 1 and sort the rest in decreasing order."""
    return BlowupClass(c.d, tuple(sorted((x for x in c.alphas if x not in (0, 1)), reverse=True)))


def _decide(c: BlowupClass) -> Optional[int]:
    d, al = c.d, c.alphas
    if d == 0 and al == (-1,):
        return 1
    if any(x < 0 for x in al):
        return 0
    if c.expected_dimension < 0:
        return 0
    if d == 1 and not al:
        return 1
    if d >= 2 and (al == (d - 1,) or (d == 2 and not al)):
        return 1
    return None


def _moves(c: BlowupClass) -> Iterator[BlowupClass]:
    # dropped multiplicities may be restored: zeros freely, and ones as long
    # as the implicit point conditions (the expected dimension) allow
    ones = min(3, c.expected_dimension)
    padded = BlowupClass(c.d, c.alphas + (1,) * ones + (0, 0, 0))
    seen = set()
    for triple in combinations(range(len(padded.alphas)), 3):
        key = tuple(padded.alphas[t] for t in triple)
        if key in seen:
            continue
        seen.add(key)
        yield normalize_class(cremona(padded, triple))


def blowup_eval(c: BlowupClass, max_depth: int = 64, max_states: int = 200_000) -> BlowupValue:
    """Evaluate ``N(d; alphas)`` as 0 or 1, or return :data:`UNDECIDED`.

    Runs a best-first search over Cremona moves, preferring classes of low
    degree, until a class is decided by one of the terminal rules.  Every
    rule preserves the invariant, so the first decided class gives the
    answer.  Chains are limited to ``max_depth`` moves.
    """
    start = normalize_class(c)
    verdict = _decide(start)
    if verdict is not None:
        return verdict
    best_depth = {start: 0}
    heap = [(start.d, 0, 0, start)]
    counter = 1
    while heap:
        _, depth, _, cur = heapq.heappop(heap)
        if depth > best_depth.get(cur, depth) or depth >= max_depth:
            continue
        for nxt in _moves(cur):
            verdict = _decide(nxt)
            if verdict is not None:
                return verdict
            if nxt in best_depth and best_depth[nxt] <= depth + 1:
                continue
            if len(best_depth) >= max_states:
                return UNDECIDED
            best_depth[nxt] = depth + 1
            heapq.heappush(heap, (nxt.d, depth + 1, counter, nxt))
            counter += 1
    return UNDECIDED


def gbl_contribution(a_vec: Sequence[int], b_vec: Sequence[int]) -> int:
    """``prod p(a_i) * prod b_j sigma_1(b_j)``."""
    return prod(partition_count(x) for x in a_vec) * prod(b * sigma(1, b) for b in b_vec)


def gbl_brute_force(g: int, p: int, slots: int = 24) -> int:
    """Sum of :func:`gbl_contribution` over all ``(a, b)`` with ``sum a + sum b = p``.

    ``a`` runs over vectors of ``slots`` non-negative integers and ``b`` over
    ``g``-tuples of positive integers.  Vectors ``a`` are grouped by their
    multiset of nonzero entries and weighted by the number of placements.
    """
    if g < 0 or p < 0:
        raise OutOfRange("g and p must be non-negative")
    total = 0
    for s in range(0, p - g + 1):
        b_total = 0
        for b in _compositions(p - s, g):
            b_total += gbl_contribution((), b)
        if not b_total:
            continue
        a_total = 0
        for parts in partitions(s):
            if len(parts) > slots:
                continue
            mult = Counter(parts)
            placements = factorial(slots) // (factorial(slots - len(parts)) * prod(factorial(v) for v in mult.values()))
            a_total += placements * gbl_contribution(parts, ())
        total += a_total * b_total
    return total
