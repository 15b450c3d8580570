"""Boundary normalization of polygons inscribed in n·Δ.

Three steps turn a polygon in n·Δ into one with the same or more vertices
that meets every side of n·Δ in a single unit edge and has no lattice
points in the relative interior of its edges:

    touch_all_edges        P + (n - n(P))·Δ
    unit_boundary_edges    shrink or create the contact with each side
    strip_boundary_points  cut off vertices next to edge-interior lattice points

Every side of n·Δ is handled in the frame of the side y = 0. The unimodular
map T(x, y) = (n - x - y, x) permutes the sides (x = 0 goes to y = 0, and
x + y = n goes there under T^2), so one routine serves all three.
"""

import logging
from math import gcd
from typing import Dict, Iterable, List, Optional, Set

from geometry.polytope import (
    boundary_lattice_points,
    convex_hull,
    edge_lattice_points,
    hull_vertices,
    lattice_points,
    minkowski_sum,
    simplex,
    simplicial_diameter,
)
from models.errors import LatticeDomainError, NormalizationError
from models.lattice import LatticePoint
from models.normalization import NormalizationResult
from models.polytope import Polytope

logger = logging.getLogger(__name__)

# Processing order of the sides, with the number of T-turns taking each to y = 0.
SIDES = ("bottom", "left", "diagonal")
DEFAULT_MAX_SWEEPS = 16

E1 = LatticePoint(1, 0)


def _turn(point: LatticePoint, n: int) -> LatticePoint:
    return LatticePoint(n - point.x - point.y, point.x)


def _unturn(point: LatticePoint, n: int) -> LatticePoint:
    return LatticePoint(point.y, n - point.x - point.y)


def _to_frame(points: Iterable[LatticePoint], n: int, turns: int) -> List[LatticePoint]:
    result = list(points)
    for _ in range(turns):
        result = [_turn(p, n) for p in result]
    return result


def _from_frame(points: Iterable[LatticePoint], n: int, turns: int) -> List[LatticePoint]:
    result = list(points)
    for _ in range(turns):
        result = [_unturn(p, n) for p in result]
    return result


def _on_side(point: LatticePoint, side: str, n: int) -> bool:
    if side == "bottom":
        return point.y == 0
    if side == "left":
        return point.x == 0
    return point.x + point.y == n


def side_contacts(polytope: Polytope, n: int) -> Dict[str, List[LatticePoint]]:
    """Vertices of P on each side of n·Δ, with P in its normalized placement."""
    return {side: sorted(v for v in polytope.vertices if _on_side(v, side, n)) for side in SIDES}


def contact_length(points: List[LatticePoint]) -> Optional[int]:
    """Lattice length of a contact: None when empty, 0 for a single vertex."""
    if not points:
        return None
    if len(points) == 1:
        return 0
    a, b = points[0], points[-1]
    return gcd(b.x - a.x, b.y - a.y)


def has_unit_contacts(polytope: Polytope, n: int) -> bool:
    return all(contact_length(c) == 1 for c in side_contacts(polytope, n).values())


def boundary_points_are_vertices(polytope: Polytope) -> bool:
    return set(boundary_lattice_points(polytope)) == set(polytope.vertices)


def arc_condition(polytope: Polytope, n: int) -> bool:
    """All contacts are unit edges and every arc between two of them has at least two edges."""
    verts = polytope.vertices
    count = len(verts)
    if count < 3:
        return False
    starts = []
    for contact in side_contacts(polytope, n).values():
        if len(contact) != 2 or contact_length(contact) != 1:
            return False
        i, j = verts.index(contact[0]), verts.index(contact[1])
        if (i + 1) % count == j:
            starts.append(i)
        elif (j + 1) % count == i:
            starts.append(j)
        else:
            return False
    starts.sort()
    for k, start in enumerate(starts):
        following = starts[(k + 1) % 3]
        if (following - (start + 1)) % count < 2:
            return False
    return True


def touch_all_edges(polytope: Polytope, n: int) -> Polytope:
    """P + (n - n(P))·Δ, which has diameter exactly n."""
    diameter = simplicial_diameter(polytope)
    if diameter > n:
        raise LatticeDomainError(f"Polytope has simplicial diameter {diameter} > {n}")
    if diameter == n:
        return polytope
    return minkowski_sum(polytope, simplex(n - diameter))


def _bottom_candidates(vertices: List[LatticePoint], n: int) -> List[List[LatticePoint]]:
    """Point sets making the contact with y = 0 a unit edge, best first.

    vertices is a counterclockwise vertex list placed in n·Δ.
    """
    contact = sorted(v for v in vertices if v.y == 0)
    if len(contact) == 2:
        a, b = contact
        if b.x - a.x == 1:
            return []
        keep_a = [v for v in vertices if v != b] + [a + E1]
        keep_b = [v for v in vertices if v != a] + [b - E1]
        b_elsewhere = b.x + b.y == n
        a_elsewhere = a.x == 0
        if b_elsewhere and not a_elsewhere:
            return [keep_b, keep_a]
        return [keep_a, keep_b]
    if len(contact) != 1:
        return []

    v0 = contact[0]
    count = len(vertices)
    index = vertices.index(v0)
    arc: List[LatticePoint] = []
    if v0.x + v0.y == n:
        # v0 = (n, 0): walk clockwise toward x = 0 and shift left.
        while vertices[index].x > 0 and len(arc) < count:
            arc.append(vertices[index])
            index = (index - 1) % count
        shift = LatticePoint(-1, 0)
    else:
        while vertices[index].x + vertices[index].y < n and len(arc) < count:
            arc.append(vertices[index])
            index = (index + 1) % count
        shift = E1
    return [list(vertices) + [v + shift for v in arc]]


def _fits_tightly(points: List[LatticePoint], n: int) -> bool:
    return (
        min(p.x for p in points) == 0
        and min(p.y for p in points) == 0
        and max(p.x + p.y for p in points) == n
    )


def _normalize_side(polytope: Polytope, n: int, turns: int) -> Polytope:
    vertices = _to_frame(polytope.vertices, n, turns)
    for candidate in _bottom_candidates(vertices, n):
        if not _fits_tightly(candidate, n):
            continue
        hull = hull_vertices(candidate)
        if len(hull) < polytope.f0:
            continue
        result = convex_hull(_from_frame(hull, n, turns))
        logger.debug(f"{SIDES[turns]} contact adjusted: f0 {polytope.f0} -> {result.f0}")
        return result
    return polytope


def unit_boundary_edges(polytope: Polytope, n: int, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> Polytope:
    """Make each side of n·Δ meet P in a single edge of lattice length 1 where possible.

    Sides are processed bottom, left, diagonal, and the sweep repeats until
    nothing changes. A step is kept only if P still touches all three
    sides and loses no vertices.
    """
    diameter = simplicial_diameter(polytope)
    if diameter != n:
        raise LatticeDomainError(f"unit_boundary_edges needs diameter exactly {n}, got {diameter}")
    current = polytope
    seen = {current.vertices}
    for sweep in range(max_sweeps):
        before = current
        for turns in range(len(SIDES)):
            current = _normalize_side(current, n, turns)
        if current == before:
            break
        if current.vertices in seen:
            logger.warning(f"Contact normalization cycled after {sweep + 1} sweeps")
            break
        seen.add(current.vertices)
    else:
        logger.warning(f"Contact normalization stopped after {max_sweeps} sweeps")
    return current


def _strip_vertices(vertices: List[LatticePoint], protected: Set[LatticePoint], limit: int) -> List[LatticePoint]:
    for _ in range(limit + 1):
        if len(vertices) == 1:
            return vertices
        if len(vertices) == 2:
            a, b = vertices
            interior = edge_lattice_points(a, b)
            return [a, interior[0]] if interior else vertices
        count = len(vertices)
        candidates = []
        for i in range(count):
            for x in edge_lattice_points(vertices[i], vertices[(i + 1) % count]):
                candidates.append((x, i))
        if not candidates:
            return vertices
        x, i = min(candidates)
        remove = i
        if vertices[i] in protected and vertices[(i + 1) % count] not in protected:
            remove = (i + 1) % count
        vertices = hull_vertices([v for j, v in enumerate(vertices) if j != remove] + [x])
    raise NormalizationError(f"Boundary stripping did not terminate within {limit} cuts")


def strip_boundary_points(polytope: Polytope, protected: Iterable[LatticePoint] = ()) -> Polytope:
    """Cut P until every boundary lattice point is a vertex, keeping f0.

    Each cut takes the lexicographically smallest lattice point x inside an
    edge (v_i, v_i+1) and replaces v_i by x; if v_i is protected and v_i+1 is
    not, v_i+1 is replaced instead. A segment shrinks to a unit segment.
    """
    limit = len(lattice_points(polytope))
    stripped = _strip_vertices(list(polytope.vertices), set(protected), limit)
    return convex_hull(stripped)


def canonicalize_maximal(polytope: Polytope, n: int) -> NormalizationResult:
    """touch_all_edges, then unit_boundary_edges, then strip_boundary_points.

    Raises:
        NormalizationError: if every arc carries at least three vertices
            and the output still lacks one of the two boundary properties
    """
    f0_before = polytope.f0
    touched = touch_all_edges(polytope, n)
    contacted = unit_boundary_edges(touched, n)
    arcs_ok = arc_condition(contacted, n)
    protected = {v for contact in side_contacts(contacted, n).values() for v in contact}
    stripped = strip_boundary_points(contacted, protected)

    result = NormalizationResult(
        polytope=stripped,
        n=n,
        f0_before=f0_before,
        f0_after=stripped.f0,
        unit_contacts=has_unit_contacts(stripped, n),
        boundary_points_are_vertices=boundary_points_are_vertices(stripped),
        arc_condition=arcs_ok,
    )
    if arcs_ok and not result.has_both_properties:
        raise NormalizationError(
            f"Normalization of {polytope} in {n}·Δ lost a boundary property: "
            f"unit_contacts={result.unit_contacts}, "
            f"boundary_points_are_vertices={result.boundary_points_are_vertices}"
        )
    logger.info(f"Normalized polytope in {n}·Δ: f0 {f0_before} -> {stripped.f0}, arcs ok: {arcs_ok}")
    return result
