"""Plane tropical curves: degree, Newton polygon and the A(d) ray bound.

The rays of a plane curve live in R^3 / R·(1,1,1). A ray u is sent to the
canonical frame as (u1 - u2, u2 - u3) and turned clockwise by a quarter
turn, giving the outer normal (u2 - u3, u2 - u1) of the matching edge of
the Newton polygon. With min(u) = 0 its asymmetric norm is u1 + u2 + u3,
so a curve of degree d has a Newton polygon of simplicial diameter d.
"""

import logging
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence

from geometry.lattice_core import lattice_length
from geometry.polytope import reconstruct, simplicial_diameter
from geometry.saturated import a_bounds
from models.errors import (
    CurveValidationError,
    DegreeMismatchError,
    DuplicateRayError,
    InconsistentCurveError,
    NonCanonicalRayError,
    NonPrimitiveRayError,
    UnbalancedCurveError,
)
from models.lattice import DualVector, exact_int
from models.polytope import Polytope, VectorConfiguration
from models.search import SearchLimits
from models.tropical import DegreeReport, Ray, TropicalCurve
from services.search_service import SearchService

logger = logging.getLogger(__name__)

# Largest degree for which ray_bound_check may run the exhaustive search.
SEARCH_MAX_DEGREE = 10


def canonical_representative(u: Sequence[int]) -> tuple:
    """Translate u along (1, ..., 1) so that its minimum coordinate is 0."""
    low = min(u)
    return tuple(int(c) - low for c in u)


def make_curve(rays: Iterable[Sequence[int]], mults: Optional[Iterable[int]] = None,
               canonicalize: bool = True) -> TropicalCurve:
    """Build a curve from ray directions and optional multiplicities (default 1)."""
    directions = [tuple(int(c) for c in u) for u in rays]
    weights = list(mults) if mults is not None else [1] * len(directions)
    if len(weights) != len(directions):
        raise CurveValidationError("Need one multiplicity per ray")
    if canonicalize:
        directions = [canonical_representative(u) for u in directions]
    return TropicalCurve(tuple(Ray(u, int(m)) for u, m in zip(directions, weights)))


def degree_of(curve: TropicalCurve) -> int:
    """Check the rays and balancing; return d with sum mult*u = d*(1, ..., 1)."""
    if not curve.rays:
        raise CurveValidationError("A tropical curve needs at least one ray")
    size = curve.dimension
    if size < 3:
        raise CurveValidationError(f"Rays need at least 3 coordinates, got {size}")
    seen = set()
    for ray in curve.rays:
        if ray.dimension != size:
            raise CurveValidationError(f"Ray {ray.u} has {ray.dimension} coordinates, expected {size}")
        if min(ray.u) != 0:
            raise NonCanonicalRayError(f"Ray {ray.u} does not have minimum coordinate 0")
        if gcd(*ray.u) != 1:
            raise NonPrimitiveRayError(f"Ray {ray.u} is not primitive")
        if ray.u in seen:
            raise DuplicateRayError(f"Ray direction {ray.u} appears twice")
        seen.add(ray.u)
    total = [sum(ray.mult * ray.u[i] for ray in curve.rays) for i in range(size)]
    if len(set(total)) != 1:
        raise UnbalancedCurveError(f"Weighted rays sum to {tuple(total)}, not a multiple of (1, ..., 1)")
    return total[0]


def validate(curve: TropicalCurve, claimed_degree: Optional[int] = None) -> DegreeReport:
    """Degree, ray count and the A(d) comparison.

    Raises:
        CurveValidationError: one of its subclasses naming the failed check
    """
    degree = degree_of(curve)
    if claimed_degree is not None and claimed_degree != degree:
        raise DegreeMismatchError(f"Curve has degree {degree}, not the claimed {claimed_degree}")
    count = len(curve.rays)
    if not curve.is_plane:
        logger.info(f"Curve in dimension {curve.dimension} is not plane; skipping the A(d) bound")
        return DegreeReport(degree=degree, ray_count=count, plane=False)
    bound = a_bounds(degree)
    return DegreeReport(
        degree=degree,
        ray_count=count,
        plane=True,
        bound=bound,
        within_bound=_verdict(count, bound.lower, bound.upper),
    )


def _verdict(count: int, lower: int, upper: int) -> Optional[bool]:
    if count <= lower:
        return True
    if count > upper:
        return False
    return None


def ray_to_dual(ray: Ray) -> DualVector:
    """Outer normal of the Newton polygon edge dual to a plane ray."""
    u1, u2, u3 = ray.u
    return DualVector(ray.mult * (u2 - u3), ray.mult * (u2 - u1))


def newton_polytope(curve: TropicalCurve) -> Polytope:
    """The lattice polygon whose edges are dual to the rays.

    Raises:
        CurveValidationError: if the curve is not a valid plane curve
        InconsistentCurveError: if the polygon does not sit in d·Δ with one
            edge per ray
    """
    degree = degree_of(curve)
    if not curve.is_plane:
        raise CurveValidationError(f"Newton polygons are computed for plane curves only, got dimension {curve.dimension}")
    polygon = reconstruct(VectorConfiguration.of(ray_to_dual(ray) for ray in curve.rays))
    diameter = simplicial_diameter(polygon)
    if diameter != degree:
        raise InconsistentCurveError(f"Newton polygon has diameter {diameter}, expected degree {degree}")
    edges = len(polygon.edges())
    if edges != len(curve.rays):
        raise InconsistentCurveError(f"Newton polygon has {edges} edges for {len(curve.rays)} rays")
    return polygon


def ray_bound_check(curve: TropicalCurve, claimed_degree: Optional[int] = None, search: bool = False,
                    limits: Optional[SearchLimits] = None) -> DegreeReport:
    """validate, then the Newton polygon check and, if asked, the exact A(d).

    Raises:
        InconsistentCurveError: if the ray count exceeds every possible A(d)
    """
    report = validate(curve, claimed_degree)
    if not report.plane:
        return report
    if report.within_bound is False:
        raise InconsistentCurveError(
            f"{report.ray_count} rays exceed A({report.degree}) <= {report.bound.upper}; "
            f"no plane curve of degree {report.degree} has that many rays"
        )
    polygon = newton_polytope(curve)
    exact_a = None
    within = report.within_bound
    if search and report.degree <= SEARCH_MAX_DEGREE and not report.bound.exact:
        result = SearchService(limits).max_vertices_branch_and_bound(report.degree)
        if result.is_exact:
            exact_a = result.a_of_n
            within = report.ray_count <= exact_a
    return DegreeReport(
        degree=report.degree,
        ray_count=report.ray_count,
        plane=True,
        bound=report.bound,
        within_bound=within,
        exact_a=exact_a,
        newton_diameter=simplicial_diameter(polygon),
        newton_polytope=polygon,
    )


def curve_from_configuration(config: VectorConfiguration) -> TropicalCurve:
    """Inverse of the duality map: a balanced configuration gives a plane curve."""
    if not config.is_balanced:
        raise UnbalancedCurveError(f"Configuration sums to {config.total()}, not zero")
    rays: List[Ray] = []
    for v in config.vectors:
        # Undo the quarter turn, then lift (x, y) = (u1 - u2, u2 - u3) with u3 = 0.
        x, y = -v.q, v.p
        u = canonical_representative((x + y, y, 0))
        mult = lattice_length(v)
        rays.append(Ray(tuple(c // mult for c in u), mult))
    return TropicalCurve(tuple(rays))


def standard_rays_curve(size: int = 3) -> TropicalCurve:
    """Rays e_1, ..., e_N with multiplicity 1; degree 1."""
    if size < 3:
        raise CurveValidationError(f"Need at least 3 coordinates, got {size}")
    return make_curve([tuple(1 if i == j else 0 for i in range(size)) for j in range(size)])


def pairs_curve(size: int = 3) -> TropicalCurve:
    """Rays e_i and e_i + e_j for i < j; degree N."""
    if size < 3:
        raise CurveValidationError(f"Need at least 3 coordinates, got {size}")
    rays = [tuple(1 if i == j else 0 for i in range(size)) for j in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            rays.append(tuple(1 if i in (a, b) else 0 for i in range(size)))
    return make_curve(rays)


def curve_from_dict(data: Dict, canonicalize: bool = True) -> TropicalCurve:
    """Load {"rays": [{"u": [...], "mult": m}, ...]}; representatives are canonicalized."""
    if not isinstance(data, dict) or not isinstance(data.get("rays"), list):
        raise CurveValidationError("Curve JSON needs a 'rays' list")
    try:
        directions = [[exact_int(c) for c in item["u"]] for item in data["rays"]]
        mults = [exact_int(item.get("mult", 1)) for item in data["rays"]]
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise CurveValidationError(f"Invalid ray entry: {e}")
    return make_curve(directions, mults, canonicalize=canonicalize)
