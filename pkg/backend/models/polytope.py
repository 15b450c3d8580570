"""Polytope and vector configuration models.

A Polytope is the canonical representative of a lattice polygon up to
translation: counterclockwise vertices, starting at the lexicographically
smallest vertex, translated so that min x = min y = 0. Points and segments
are allowed.

A VectorConfiguration is a finite set of non-zero dual vectors with pairwise
distinct directions, kept in counterclockwise angular order starting from
direction (1, 0), so equality of configurations is list equality.
"""

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd
from typing import Dict, Iterable, List, Tuple

from .errors import ConfigurationValidationError
from .lattice import DualVector, LatticePoint


def _cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def _half(v: DualVector) -> int:
    # 0 for angles in [0, pi), 1 for angles in [pi, 2*pi)
    return 0 if (v.q > 0 or (v.q == 0 and v.p > 0)) else 1


def angular_compare(v: DualVector, w: DualVector) -> int:
    """Exact counterclockwise angle comparison starting from direction (1, 0)."""
    hv, hw = _half(v), _half(w)
    if hv != hw:
        return -1 if hv < hw else 1
    det = v.p * w.q - v.q * w.p
    if det > 0:
        return -1
    if det < 0:
        return 1
    return 0


def direction_key(v: DualVector) -> Tuple[int, int]:
    """The primitive direction of a non-zero vector, usable as a dict key."""
    g = gcd(v.p, v.q)
    return (v.p // g, v.q // g)


@dataclass(frozen=True)
class Polytope:
    """A translation-normalized lattice polygon, segment or point.

    Attributes:
        vertices: Counterclockwise vertex list starting at the lexicographically
            smallest vertex, with min x = min y = 0
    """
    vertices: Tuple[LatticePoint, ...]

    def __post_init__(self):
        verts = self.vertices
        if len(verts) == 0:
            raise ConfigurationValidationError("A polytope needs at least one vertex")
        if min(v.x for v in verts) != 0 or min(v.y for v in verts) != 0:
            raise ConfigurationValidationError("Polytope vertices must be translation-normalized")
        if verts[0] != min(verts):
            raise ConfigurationValidationError("Vertex list must start at the lexicographically smallest vertex")
        if len(verts) == 2 and verts[0] == verts[1]:
            raise ConfigurationValidationError("Segment endpoints must be distinct")
        if len(verts) >= 3:
            count = len(verts)
            for i in range(count):
                if _cross(verts[i], verts[(i + 1) % count], verts[(i + 2) % count]) <= 0:
                    raise ConfigurationValidationError(
                        "Vertices must be in strictly convex counterclockwise position"
                    )

    @property
    def f0(self) -> int:
        """Number of vertices."""
        return len(self.vertices)

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def edges(self) -> List[Tuple[LatticePoint, LatticePoint]]:
        """Counterclockwise edges; a segment has its two opposite edges, a point none."""
        count = len(self.vertices)
        if count == 1:
            return []
        return [(self.vertices[i], self.vertices[(i + 1) % count]) for i in range(count)]

    def to_dict(self) -> Dict:
        return {"vertices": [v.to_list() for v in self.vertices]}

    def __str__(self):
        return "conv(" + ", ".join(str(v) for v in self.vertices) + ")"


@dataclass(frozen=True)
class VectorConfiguration:
    """Non-zero dual vectors with pairwise distinct directions, in angular order.

    Attributes:
        vectors: The vectors, sorted counterclockwise from direction (1, 0)
    """
    vectors: Tuple[DualVector, ...]

    @classmethod
    def of(cls, vectors: Iterable[DualVector]) -> "VectorConfiguration":
        """Validate and canonicalize a collection of dual vectors."""
        items = list(vectors)
        seen = set()
        for v in items:
            if v.is_zero():
                raise ConfigurationValidationError("A vector configuration cannot contain the zero vector")
            key = direction_key(v)
            if key in seen:
                raise ConfigurationValidationError(f"Two vectors share the direction {key}")
            seen.add(key)
        return cls(tuple(sorted(items, key=cmp_to_key(angular_compare))))

    def __post_init__(self):
        for a, b in zip(self.vectors, self.vectors[1:]):
            if angular_compare(a, b) >= 0:
                raise ConfigurationValidationError(
                    "Vectors must be distinct directions in angular order; use VectorConfiguration.of"
                )
        if any(v.is_zero() for v in self.vectors):
            raise ConfigurationValidationError("A vector configuration cannot contain the zero vector")

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def total(self) -> DualVector:
        """Sum of all vectors."""
        return DualVector(sum(v.p for v in self.vectors), sum(v.q for v in self.vectors))

    @property
    def is_balanced(self) -> bool:
        return self.total().is_zero()

    def to_dict(self) -> Dict:
        return {"vectors": [v.to_list() for v in self.vectors]}

    def __str__(self):
        return "{" + ", ".join(str(v) for v in self.vectors) + "}"
