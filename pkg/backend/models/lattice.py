"""Lattice and dual-lattice value types.

Points of the lattice and of its dual are stored in the canonical frame,
in which the unimodular simplex is conv((0,0), (1,0), (0,1)). All
coordinates are exact Python integers.
"""

from dataclasses import dataclass
from numbers import Integral
from typing import Any, List, Tuple

# The asymmetric norm of a dual lattice vector is always a non-negative integer.
NormValue = int


def exact_int(value: Any) -> int:
    """Coordinate from a JSON document; floats and booleans raise TypeError."""
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise TypeError(f"expected an integer coordinate, got {value!r}")
    return int(value)


@dataclass(frozen=True, order=True)
class LatticePoint:
    """A point of the rank-2 lattice.

    Attributes:
        x: First canonical-frame coordinate
        y: Second canonical-frame coordinate
    """
    x: int
    y: int

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x - other.x, self.y - other.y)

    def scaled(self, factor: int) -> "LatticePoint":
        return LatticePoint(factor * self.x, factor * self.y)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.x, self.y)

    def to_list(self) -> List[int]:
        return [self.x, self.y]

    def __str__(self):
        return f"({self.x},{self.y})"


@dataclass(frozen=True, order=True)
class DualVector:
    """An element of the dual lattice in the dual basis of the canonical frame.

    A dual vector (p, q) evaluates a lattice point (x, y) to p*x + q*y.

    Attributes:
        p: First dual coordinate
        q: Second dual coordinate
    """
    p: int
    q: int

    def __add__(self, other: "DualVector") -> "DualVector":
        return DualVector(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "DualVector") -> "DualVector":
        return DualVector(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "DualVector":
        return DualVector(-self.p, -self.q)

    def scaled(self, factor: int) -> "DualVector":
        return DualVector(factor * self.p, factor * self.q)

    def evaluate(self, point: LatticePoint) -> int:
        """Pair the dual vector with a lattice point."""
        return self.p * point.x + self.q * point.y

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def as_tuple(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def to_list(self) -> List[int]:
        return [self.p, self.q]

    def __str__(self):
        return f"({self.p},{self.q})"


ZERO = DualVector(0, 0)
