#!/usr/bin/env python3
"""
Tests for tropical curve validation and the ray count bound.
"""

import sys
from pathlib import Path

import numpy as np

# Add the backend directory to the Python path
backend_path = Path(__file__).parent / "backend"
sys.path.insert(0, str(backend_path))

from geometry.polytope import d_map, polytope_from_points, simplex, simplicial_diameter
from geometry.saturated import a_bounds, polytope_of, s_leq
from models.errors import (
    CurveValidationError,
    DegreeMismatchError,
    DuplicateRayError,
    NonCanonicalRayError,
    NonPrimitiveRayError,
    UnbalancedCurveError,
)
from models.lattice import DualVector
from models.tropical import Ray
from services.tropical_service import (
    curve_from_configuration,
    curve_from_dict,
    degree_of,
    make_curve,
    newton_polytope,
    pairs_curve,
    ray_bound_check,
    ray_to_dual,
    standard_rays_curve,
    validate,
)

OCTAGON = polytope_from_points([(3, 1), (3, 0), (2, 0), (1, 1), (0, 3), (0, 4), (1, 4), (2, 3)])


def _expect(error, action, *args, **kwargs):
    try:
        action(*args, **kwargs)
    except error:
        return
    assert False, f"expected {error.__name__} from {action.__name__}{args}"


def test_standard_rays():
    curve = standard_rays_curve(3)
    report = validate(curve)
    assert (report.degree, report.ray_count, report.plane) == (1, 3, True)
    assert report.tight and report.within_bound
    assert [ray_to_dual(ray) for ray in curve.rays] == [DualVector(0, -1), DualVector(1, 1), DualVector(-1, 0)]
    assert newton_polytope(curve) == simplex(1)
    checked = ray_bound_check(curve)
    assert checked.newton_diameter == 1
    assert checked.newton_polytope == simplex(1)
    assert checked.to_dict()["newton_polytope"]["vertices"] == [[0, 0], [1, 0], [0, 1]]
    print("✅ The three coordinate rays form a tight degree-1 curve")


def test_pairs_curve():
    curve = pairs_curve(3)
    report = validate(curve)
    assert (report.degree, report.ray_count) == (3, 6)
    assert report.tight
    assert report.describe() == "degree 3, rays 6, bound A(3)=6: tight"
    newton = newton_polytope(curve)
    assert newton == polytope_of(s_leq(2))
    assert simplicial_diameter(newton) == 3
    assert len(newton.edges()) == 6
    print("✅ Coordinate rays plus pairwise sums form a tight degree-3 curve")


def test_doubled_multiplicities():
    curve = make_curve([(1, 0, 0), (0, 1, 0), (0, 0, 1)], mults=[2, 2, 2])
    report = validate(curve)
    assert (report.degree, report.ray_count) == (2, 3)
    assert report.within_bound is True
    assert not report.tight
    assert newton_polytope(curve) == simplex(2)
    searched = ray_bound_check(curve, claimed_degree=2, search=True)
    assert searched.exact_a == 4
    assert searched.within_bound is True
    assert searched.newton_diameter == 2 and searched.newton_polytope == simplex(2)
    assert "A(2)=4 (search)" in searched.describe()
    print("✅ Doubled multiplicities give degree 2 with Newton polygon 2 * simplex")


def test_validation_errors():
    _expect(NonCanonicalRayError, degree_of,
            make_curve([(1, 1, 2), (1, 2, 1), (2, 1, 1)], canonicalize=False))
    _expect(NonPrimitiveRayError, degree_of, make_curve([(2, 0, 0), (0, 2, 0), (0, 0, 2)]))
    _expect(DuplicateRayError, degree_of, make_curve([(1, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    _expect(UnbalancedCurveError, degree_of, make_curve([(1, 0, 0), (0, 1, 0)]))
    _expect(DegreeMismatchError, validate, standard_rays_curve(3), 2)
    _expect(DegreeMismatchError, validate, curve_from_configuration(d_map(OCTAGON)), 2)
    _expect(CurveValidationError, degree_of, make_curve([]))
    _expect(CurveValidationError, degree_of, make_curve([(1, 0), (0, 1)]))
    _expect(CurveValidationError, make_curve, [(1, 0, 0)], [1, 2])
    _expect(CurveValidationError, Ray, (1, 0, 0), 0)
    _expect(CurveValidationError, newton_polytope, standard_rays_curve(4))
    _expect(CurveValidationError, curve_from_dict, {"rays": [{"mult": 1}]})
    _expect(CurveValidationError, curve_from_dict,
            {"rays": [{"u": [1.5, 0, 0]}, {"u": [0, 1, 0]}, {"u": [0, 0, 1]}]})
    _expect(CurveValidationError, curve_from_dict,
            {"rays": [{"u": [1, 0, 0], "mult": 1.0}, {"u": [0, 1, 0]}, {"u": [0, 0, 1]}]})
    _expect(CurveValidationError, curve_from_dict,
            {"rays": [{"u": [1, 0, 0], "mult": True}, {"u": [0, 1, 0]}, {"u": [0, 0, 1]}]})
    # every validation failure is still a ValueError
    _expect(ValueError, degree_of, make_curve([(1, 0, 0), (0, 1, 0)]))
    print("✅ Each invalid curve raises its own validation error")


def test_curves_from_polygons():
    """Curves built from polygons have degree equal to the diameter and obey the bound."""
    rng = np.random.default_rng(23)
    checked = 0
    while checked < 1000:
        count = int(rng.integers(2, 11))
        polygon = polytope_from_points(rng.integers(0, 12, size=(count, 2)).tolist())
        if polygon.f0 < 2:
            continue
        curve = curve_from_configuration(d_map(polygon))
        report = validate(curve)
        assert report.degree == simplicial_diameter(polygon)
        assert report.ray_count == polygon.f0
        assert report.within_bound is not False
        assert report.ray_count <= a_bounds(report.degree).upper
        assert newton_polytope(curve) == polygon
        checked += 1
    print("✅ 1000 curves dual to random polygons respect the A(d) bound")


def test_higher_dimensions_escape_the_bound():
    wide = standard_rays_curve(5)
    report = validate(wide)
    assert (report.degree, report.ray_count, report.plane) == (1, 5, False)
    assert report.within_bound is None
    assert "does not apply" in report.describe()
    for size in range(4, 9):
        report = ray_bound_check(pairs_curve(size))
        assert report.degree == size
        assert report.ray_count == size * (size + 1) // 2
        assert report.ray_count > a_bounds(size).upper
        assert not report.plane
        assert report.newton_polytope is None
    print("✅ Curves in higher dimensions exceed every plane bound")


def test_curve_from_dict():
    curve = curve_from_dict({"rays": [{"u": [2, 1, 1]}, {"u": [0, 1, 0]}, {"u": [3, 3, 4], "mult": 1}]})
    assert [ray.u for ray in curve.rays] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert degree_of(curve) == 1
    assert curve.to_dict()["rays"][0] == {"u": [1, 0, 0], "mult": 1}
    print("✅ Curve documents are loaded with canonical representatives")


def main():
    """Run all tests."""
    print("=" * 60)
    print("🧪 TROPICAL CURVE TESTS")
    print("=" * 60)
    print()

    tests = [
        test_standard_rays,
        test_pairs_curve,
        test_doubled_multiplicities,
        test_validation_errors,
        test_curves_from_polygons,
        test_higher_dimensions_escape_the_bound,
        test_curve_from_dict,
    ]

    results = []
    for test in tests:
        try:
            test()
            results.append(True)
        except Exception as e:
            print(f"❌ {test.__name__} failed: {e}")
            results.append(False)

    print("\n" + "=" * 60)
    print("📊 TEST SUMMARY")
    print("=" * 60)
    passed = sum(results)
    print(f"Tests passed: {passed}/{len(results)}")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
