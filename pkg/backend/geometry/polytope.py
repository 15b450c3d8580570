"""Lattice polygons up to translation and their vector configurations.

The D-map sends each counterclockwise edge with edge vector (dx, dy) to the
outer normal (dy, -dx); this vector is automatically the primitive outer
normal scaled by the lattice length of the edge. Reconstruction inverts it
by turning each normal (p, q) back into the edge vector (-q, p) and walking
the boundary in angular order.
"""

import logging
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from models.errors import ConfigurationValidationError, LatticeDomainError
from models.lattice import DualVector, LatticePoint, exact_int
from models.polytope import Polytope, VectorConfiguration, direction_key

from .lattice_core import B1, B2, B3, asymmetric_norm

logger = logging.getLogger(__name__)


class DiameterWitness(NamedTuple):
    """Simplicial diameter together with the translation placing P in value * simplex."""
    value: int
    translation: LatticePoint


def cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    """Orientation of the triple (o, a, b): > 0 counterclockwise, 0 collinear."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def hull_vertices(points: Iterable[LatticePoint]) -> List[LatticePoint]:
    """Counterclockwise hull vertices from the lexicographically smallest, in place."""
    pts = sorted(set(points))
    if not pts:
        raise LatticeDomainError("convex_hull needs at least one point")
    if len(pts) <= 2:
        return pts
    lower: List[LatticePoint] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[LatticePoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def convex_hull(points: Iterable[LatticePoint]) -> Polytope:
    """Translation-normalized convex hull, collinear boundary points dropped."""
    hull = hull_vertices(points)
    min_x = min(p.x for p in hull)
    min_y = min(p.y for p in hull)
    shifted = [LatticePoint(p.x - min_x, p.y - min_y) for p in hull]
    start = shifted.index(min(shifted))
    return Polytope(tuple(shifted[start:] + shifted[:start]))


def polytope_from_points(points: Sequence[Sequence[int]]) -> Polytope:
    """Convenience wrapper taking [x, y] pairs."""
    return convex_hull(LatticePoint(int(x), int(y)) for x, y in points)


def d_map(polytope: Polytope) -> VectorConfiguration:
    """Edge normals scaled by lattice length; empty for a point."""
    normals = []
    for a, b in polytope.edges():
        dx, dy = b.x - a.x, b.y - a.y
        normals.append(DualVector(dy, -dx))
    return VectorConfiguration.of(normals)


def reconstruct(config: VectorConfiguration) -> Polytope:
    """The unique normalized polytope whose D-map is the given balanced configuration."""
    if not config.is_balanced:
        raise ConfigurationValidationError(
            f"Cannot reconstruct a polytope from an unbalanced configuration (sum {config.total()})"
        )
    current = LatticePoint(0, 0)
    walk = [current]
    for v in config.vectors[:-1]:
        current = current + LatticePoint(-v.q, v.p)
        walk.append(current)
    return convex_hull(walk)


def minkowski_sum(first: Polytope, second: Polytope) -> Polytope:
    return convex_hull(a + b for a in first.vertices for b in second.vertices)


def config_merge(first: VectorConfiguration, second: VectorConfiguration) -> VectorConfiguration:
    """Union of two configurations with same-direction vectors replaced by their sum."""
    merged: Dict[Tuple[int, int], DualVector] = {}
    for v in list(first.vectors) + list(second.vectors):
        key = direction_key(v)
        merged[key] = merged[key] + v if key in merged else v
    return VectorConfiguration.of(merged.values())


def simplicial_diameter_maxsum(polytope: Polytope) -> DiameterWitness:
    """Sum of the maxima of b1, b2, b3 over the vertices, with the placing translation."""
    verts = polytope.vertices
    value = (
        max(B1.evaluate(v) for v in verts)
        + max(B2.evaluate(v) for v in verts)
        + max(B3.evaluate(v) for v in verts)
    )
    translation = LatticePoint(-min(v.x for v in verts), -min(v.y for v in verts))
    return DiameterWitness(value, translation)


def simplicial_diameter(polytope: Polytope) -> int:
    return simplicial_diameter_maxsum(polytope).value


def valuation_m(config: VectorConfiguration) -> Fraction:
    """One third of the sum of asymmetric norms, as an exact rational."""
    return Fraction(sum(asymmetric_norm(v) for v in config.vectors), 3)


def simplex(n: int) -> Polytope:
    """n times the unit triangle; a point for n = 0."""
    if n < 0:
        raise LatticeDomainError(f"simplex dilation must be non-negative, got {n}")
    if n == 0:
        return Polytope((LatticePoint(0, 0),))
    return Polytope((LatticePoint(0, 0), LatticePoint(n, 0), LatticePoint(0, n)))


def dilate(polytope: Polytope, factor: int) -> Polytope:
    if factor < 0:
        raise LatticeDomainError(f"dilation factor must be non-negative, got {factor}")
    return convex_hull(v.scaled(factor) for v in polytope.vertices)


def contains(polytope: Polytope, point: LatticePoint) -> bool:
    """Closed containment test with exact orientation predicates."""
    verts = polytope.vertices
    if len(verts) == 1:
        return point == verts[0]
    if len(verts) == 2:
        a, b = verts
        if cross(a, b, point) != 0:
            return False
        return min(a.x, b.x) <= point.x <= max(a.x, b.x) and min(a.y, b.y) <= point.y <= max(a.y, b.y)
    return all(cross(a, b, point) >= 0 for a, b in polytope.edges())


def lattice_points(polytope: Polytope) -> List[LatticePoint]:
    """All lattice points of the polytope, in lexicographic order."""
    max_x = max(v.x for v in polytope.vertices)
    max_y = max(v.y for v in polytope.vertices)
    return [
        LatticePoint(x, y)
        for x in range(max_x + 1)
        for y in range(max_y + 1)
        if contains(polytope, LatticePoint(x, y))
    ]


def edge_lattice_points(a: LatticePoint, b: LatticePoint) -> List[LatticePoint]:
    """Lattice points strictly between a and b."""
    g = gcd(b.x - a.x, b.y - a.y)
    if g <= 1:
        return []
    step = LatticePoint((b.x - a.x) // g, (b.y - a.y) // g)
    return [a + step.scaled(t) for t in range(1, g)]


def boundary_lattice_points(polytope: Polytope) -> List[LatticePoint]:
    """Vertices plus the lattice points in the relative interiors of the edges."""
    points = set(polytope.vertices)
    edges = polytope.edges()
    if len(polytope.vertices) == 2:
        edges = edges[:1]
    for a, b in edges:
        points.update(edge_lattice_points(a, b))
    return sorted(points)


def cut_by_chord(polytope: Polytope, a: LatticePoint, b: LatticePoint) -> Tuple[Polytope, Polytope]:
    """Split along the chord through two boundary lattice points a != b.

    Returns the pieces left and right of the directed line a -> b, each
    containing the chord. The pieces are translation-normalized, so they
    are compared with each other only through translation invariants.
    """
    if a == b:
        raise LatticeDomainError("A chord needs two distinct points")
    left = [v for v in polytope.vertices if cross(a, b, v) >= 0] + [a, b]
    right = [v for v in polytope.vertices if cross(a, b, v) <= 0] + [a, b]
    return convex_hull(left), convex_hull(right)


def polytope_from_dict(data: Dict) -> Polytope:
    """Load {"vertices": [[x, y], ...]} in any order; the hull is canonicalized."""
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list) or not data["vertices"]:
        raise ConfigurationValidationError("Polytope JSON needs a non-empty 'vertices' list")
    try:
        points = [LatticePoint(exact_int(x), exact_int(y)) for x, y in data["vertices"]]
    except (TypeError, ValueError) as e:
        raise ConfigurationValidationError(f"Invalid vertex entry: {e}")
    hull = convex_hull(points)
    if hull.f0 != len(set(points)):
        logger.warning(f"Dropped {len(set(points)) - hull.f0} non-vertex points while loading polytope")
    return hull


def configuration_from_dict(data: Dict) -> VectorConfiguration:
    """Load {"vectors": [[p, q], ...]}."""
    if not isinstance(data, dict) or not isinstance(data.get("vectors"), list):
        raise ConfigurationValidationError("Configuration JSON needs a 'vectors' list")
    try:
        vectors = [DualVector(exact_int(p), exact_int(q)) for p, q in data["vectors"]]
    except (TypeError, ValueError) as e:
        raise ConfigurationValidationError(f"Invalid vector entry: {e}")
    return VectorConfiguration.of(vectors)
