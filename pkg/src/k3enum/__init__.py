"""Exact enumerative invariants of K3 surfaces and the identities relating them.

Modules:

``series``         truncated Laurent series and two-variable series
``arith``          divisor sums, partitions, Bernoulli numbers
``modular``        Eisenstein series, the discriminant, ``j`` and ``f``
``k3counts``       Yau-Zaslow and genus ``g`` counts in primitive classes
``singularities``  local invariants of curve singularities
``combinat``       admissible sequences and blow-up invariants
``bps``            multiple-cover transforms and the KKV numbers
``nl_stu``         Noether-Lefschetz numbers of the STU model
"""

from .errors import (
    BasisChangeResidual,
    DivisionByZeroDegree,
    InsufficientTruncation,
    K3EnumError,
    NonInvertibleLeading,
    NonzeroConstantTerm,
    NotCoprime,
    OutOfRange,
    ZeroLeadingCoefficient,
)
from .series import BiSeries, TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "BiSeries",
    "TruncatedSeries",
    "K3EnumError",
    "InsufficientTruncation",
    "ZeroLeadingCoefficient",
    "NonzeroConstantTerm",
    "NonInvertibleLeading",
    "OutOfRange",
    "NotCoprime",
    "BasisChangeResidual",
    "DivisionByZeroDegree",
]
