"""Exact grid-movement costs of the form a + b*sqrt(2).

Every cost, g-, f-, h- and delta-value in this package is a pair of
integers (straight, diag) representing straight + diag*sqrt(2), plus the
distinguished value INFINITE.  Keeping the representation exact removes
every floating-point tie-break from the search algorithms, so traces and
counters are reproducible bit for bit.
"""

from __future__ import annotations

import math

_SCALE = 10**18
# round(sqrt(2) * 10**18); off from the true product by less than 0.2
_ROOT2 = 1_414_213_562_373_095_049
_INF_KEY = 10**40


def compare_exact(a1: int, b1: int, a2: int, b2: int) -> int:
    """Sign of (a1 + b1*sqrt(2)) - (a2 + b2*sqrt(2)), integer arithmetic only.

    Mixed-sign cases are decided by comparing squares, which is exact
    because sqrt(2) is irrational.  This is the reference order; Cost
    comparisons use a precomputed key that the tests check against it.
    """
    da = a1 - a2
    db = b1 - b2
    if da == 0 and db == 0:
        return 0
    if da >= 0 and db >= 0:
        return 1
    if da <= 0 and db <= 0:
        return -1
    if da > 0:  # db < 0: positive iff da > |db|*sqrt(2) iff da^2 > 2*db^2
        return 1 if da * da > 2 * db * db else -1
    return 1 if 2 * db * db > da * da else -1


class Cost:
    """An exact a + b*sqrt(2) quantity with a total order.

    The comparison key ``a*10**18 + b*_ROOT2`` preserves the exact order
    whenever |a| and |b| stay below ~10**8: the smallest gap between two
    distinct representable values with components bounded by M is at least
    10**18 / (5*M) in key units, while the rounding error of the key is at
    most 0.2*|b|.  Grid searches here keep components below 10**6.
    """

    __slots__ = ("straight", "diag", "key")

    def __init__(self, straight: int = 0, diag: int = 0):
        self.straight = straight
        self.diag = diag
        self.key = straight * _SCALE + diag * _ROOT2

    def __add__(self, other: "Cost") -> "Cost":
        if other.key >= _INF_KEY:
            return INFINITE
        return Cost(self.straight + other.straight, self.diag + other.diag)

    def __sub__(self, other: "Cost") -> "Cost":
        if other.key >= _INF_KEY:
            raise ValueError("cannot subtract INFINITE")
        return Cost(self.straight - other.straight, self.diag - other.diag)

    def __lt__(self, other: "Cost") -> bool:
        return self.key < other.key

    def __le__(self, other: "Cost") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "Cost") -> bool:
        return self.key > other.key

    def __ge__(self, other: "Cost") -> bool:
        return self.key >= other.key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cost) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __float__(self) -> float:
        return self.straight + self.diag * math.sqrt(2)

    @property
    def is_infinite(self) -> bool:
        return self.key >= _INF_KEY

    def exact_str(self) -> str:
        """Canonical text form, e.g. '12+5r2'."""
        return f"{self.straight}+{self.diag}r2"

    def __repr__(self) -> str:
        return f"Cost({self.straight}, {self.diag})"


class _InfiniteCost(Cost):
    """Absorbing maximum element of the cost order."""

    def __init__(self):
        self.straight = None
        self.diag = None
        self.key = _INF_KEY

    def __add__(self, other: Cost) -> Cost:
        return self

    __radd__ = __add__

    def __sub__(self, other: Cost) -> Cost:
        if other.key >= _INF_KEY:
            raise ValueError("INFINITE - INFINITE is undefined")
        return self

    def __float__(self) -> float:
        return math.inf

    def exact_str(self) -> str:
        return "inf"

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = _InfiniteCost()
ZERO = Cost(0, 0)
STRAIGHT = Cost(1, 0)
DIAGONAL = Cost(0, 1)
