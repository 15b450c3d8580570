"""Saturated sets and bounds on the maximal vertex count A(n)."""

from dataclasses import dataclass
from typing import Dict, Tuple

from .errors import LatticeDomainError
from .lattice import DualVector


@dataclass(frozen=True)
class SaturatedSet:
    """S = S_{<=q} together with a proper subset R of the norm-(q+1) level.

    The full vector list is derived on demand (geometry.saturated.full_set)
    because S_{<=q} grows quadratically in q.

    Attributes:
        q: Norm bound; every primitive vector of norm <= q belongs to S
        extras: The set R, primitive vectors of norm q + 1
    """
    q: int
    extras: Tuple[DualVector, ...] = ()

    def __post_init__(self):
        if self.q < 0:
            raise LatticeDomainError(f"Saturated set norm bound must be non-negative, got {self.q}")

    @property
    def extras_total(self) -> DualVector:
        return DualVector(sum(v.p for v in self.extras), sum(v.q for v in self.extras))

    @property
    def is_balanced(self) -> bool:
        # S_{<=q} is a union of cyclic triples, so only R can unbalance S.
        return self.extras_total.is_zero()

    def to_dict(self) -> Dict:
        return {"q": self.q, "extras": [v.to_list() for v in self.extras]}


@dataclass(frozen=True)
class ABound:
    """Bounds on A(n), inclusive on both sides.

    Attributes:
        n: Dilation factor of the simplex
        lower: Vertex count of the saturated construction
        upper: Largest value A(n) can take
        exact: True when lower == upper == A(n)
        q: Norm bound of the construction
        r: Number of cyclic triples taken from the norm-(q+1) level
    """
    n: int
    lower: int
    upper: int
    exact: bool
    q: int = 0
    r: int = 0

    def __post_init__(self):
        if self.lower > self.upper:
            raise LatticeDomainError(f"Lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact and self.lower != self.upper:
            raise LatticeDomainError("An exact bound must have lower == upper")

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper

    def describe(self) -> str:
        if self.exact:
            return f"exact {self.lower}"
        return f"{self.lower} ≤ A({self.n}) ≤ {self.upper}"

    def to_dict(self) -> Dict:
        return {"n": self.n, "lower": self.lower, "upper": self.upper, "exact": self.exact,
                "q": self.q, "r": self.r}
