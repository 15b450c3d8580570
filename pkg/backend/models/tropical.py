"""Tropical curve models.

A ray of a constant-coefficient tropical curve in R^N / R·(1, ..., 1) is
stored by its canonical representative: an integer vector with minimum
coordinate 0 that is primitive in the quotient lattice.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .errors import CurveValidationError
from .polytope import Polytope
from .saturated import ABound


@dataclass(frozen=True)
class Ray:
    """A weighted ray.

    Attributes:
        u: Direction representative, minimum coordinate 0
        mult: Positive integer multiplicity
    """
    u: Tuple[int, ...]
    mult: int = 1

    def __post_init__(self):
        if self.mult < 1:
            raise CurveValidationError(f"Ray multiplicity must be positive, got {self.mult}")

    @property
    def dimension(self) -> int:
        return len(self.u)

    def to_dict(self) -> Dict:
        return {"u": list(self.u), "mult": self.mult}


@dataclass(frozen=True)
class TropicalCurve:
    """A balanced weighted fan of rays; plane when N = 3."""
    rays: Tuple[Ray, ...]

    @property
    def dimension(self) -> int:
        return self.rays[0].dimension if self.rays else 0

    @property
    def is_plane(self) -> bool:
        return self.dimension == 3

    def __len__(self):
        return len(self.rays)

    def to_dict(self) -> Dict:
        return {"rays": [ray.to_dict() for ray in self.rays]}


@dataclass(frozen=True)
class DegreeReport:
    """Degree and ray count of a curve against the A(d) bound.

    Attributes:
        degree: d with sum of mult * u = d * (1, ..., 1)
        ray_count: Number of rays
        plane: False for curves in R^N / R·1 with N > 3, where the bound does not apply
        bound: a_bounds(d) for plane curves
        within_bound: True when ray_count <= A(d) is certain, False when it is
            violated, None when ray_count falls between the inclusive bounds or
            the curve is not plane
        exact_a: A(d) from an exhaustive search, when one was run
        newton_diameter: Simplicial diameter of the Newton polygon, when computed
        newton_polytope: The Newton polygon itself, when computed
    """
    degree: int
    ray_count: int
    plane: bool
    bound: Optional[ABound] = None
    within_bound: Optional[bool] = None
    exact_a: Optional[int] = None
    newton_diameter: Optional[int] = None
    newton_polytope: Optional[Polytope] = None

    @property
    def tight(self) -> bool:
        if self.exact_a is not None:
            return self.ray_count == self.exact_a
        return self.bound is not None and self.bound.exact and self.ray_count == self.bound.lower

    def describe(self) -> str:
        if not self.plane:
            return (f"degree {self.degree}, rays {self.ray_count}, "
                    f"ambient dimension > 3: the A(d) bound does not apply")
        if self.exact_a is not None:
            limit = f"A({self.degree})={self.exact_a} (search)"
        elif self.bound.exact:
            limit = f"A({self.degree})={self.bound.lower}"
        else:
            limit = self.bound.describe()
        if self.tight:
            verdict = "tight"
        elif self.within_bound is None:
            verdict = "undecided"
        else:
            verdict = "within" if self.within_bound else "violated"
        return f"degree {self.degree}, rays {self.ray_count}, bound {limit}: {verdict}"

    def to_dict(self) -> Dict:
        return {
            "degree": self.degree,
            "rays": self.ray_count,
            "plane": self.plane,
            "bound": self.bound.to_dict() if self.bound is not None else None,
            "within_bound": self.within_bound,
            "exact_a": self.exact_a,
            "tight": self.tight,
            "newton_diameter": self.newton_diameter,
            "newton_polytope": self.newton_polytope.to_dict() if self.newton_polytope is not None else None,
        }
