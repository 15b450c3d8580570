"""Result model for the boundary normalization pipeline."""

from dataclasses import dataclass
from typing import Dict

from .polytope import Polytope


@dataclass(frozen=True)
class NormalizationResult:
    """Outcome of canonicalize_maximal.

    Attributes:
        polytope: Normalized polytope, placed in n·Δ
        n: Dilation factor of the bounding simplex
        f0_before: Vertex count of the input
        f0_after: Vertex count of the output
        unit_contacts: Each side of n·Δ meets the output in an edge of lattice length 1
        boundary_points_are_vertices: No lattice point lies in the relative interior of an edge
        arc_condition: Contacts are unit edges and every boundary arc between two of
            them has at least two edges
    """
    polytope: Polytope
    n: int
    f0_before: int
    f0_after: int
    unit_contacts: bool
    boundary_points_are_vertices: bool
    arc_condition: bool

    @property
    def has_both_properties(self) -> bool:
        return self.unit_contacts and self.boundary_points_are_vertices

    def to_dict(self) -> Dict:
        return {
            "polytope": self.polytope.to_dict(),
            "n": self.n,
            "f0_before": self.f0_before,
            "f0_after": self.f0_after,
            "unit_contacts": self.unit_contacts,
            "boundary_points_are_vertices": self.boundary_points_are_vertices,
            "arc_condition": self.arc_condition,
        }
