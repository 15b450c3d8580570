#!/usr/bin/env python3
"""
Tests for the asymmetric norm, primitive level sets and totients.
"""

import sys
from pathlib import Path

import numpy as np

# Add the backend directory to the Python path
backend_path = Path(__file__).parent / "backend"
sys.path.insert(0, str(backend_path))

from geometry.lattice_core import (
    B1, B2, B3,
    asymmetric_norm,
    brute_force_norm,
    canonical_normal_fan,
    cone_index,
    cyclic_rotate,
    first_cone_vectors_of_norm,
    from_triple,
    is_primitive,
    lattice_length,
    norm_pq,
    primitive_part,
    primitive_vectors_of_norm,
    to_triple,
    totient,
    totient_sums,
    totient_table,
)
from models.errors import LatticeDomainError
from models.lattice import DualVector


def test_norm_of_fan_generators():
    """The outer normals of the unit triangle have norm 1; zero has norm 0."""
    assert canonical_normal_fan() == (B1, B2, B3)
    for b in (B1, B2, B3):
        assert asymmetric_norm(b) == 1
    assert asymmetric_norm(DualVector(0, 0)) == 0
    # not symmetric
    assert asymmetric_norm(DualVector(1, 1)) == 1
    assert asymmetric_norm(DualVector(-1, -1)) == 2
    print("✅ Fan generators have norm 1 and the norm is asymmetric")


def test_closed_form_matches_membership_oracle():
    """Closed form equals the lambda-membership oracle on |p|, |q| <= 30."""
    grid = np.arange(-30, 31)
    p, q = np.meshgrid(grid, grid, indexing="ij")
    vectorized = np.maximum(np.maximum(2 * p - q, 2 * q - p), -p - q)
    for i, a in enumerate(grid):
        for j, b in enumerate(grid):
            v = DualVector(int(a), int(b))
            value = asymmetric_norm(v)
            assert value == int(vectorized[i, j])
            assert value == norm_pq(int(a), int(b))
            assert value == brute_force_norm(v), f"oracle mismatch at {v}"
    print(f"✅ Closed form agrees with the membership oracle on {grid.size ** 2} vectors")


def test_triple_view():
    """In the triple view the norm is a max of cyclic coordinate differences."""
    rng = np.random.default_rng(11)
    for p, q in rng.integers(-50, 51, size=(500, 2)):
        v = DualVector(int(p), int(q))
        w = to_triple(v)
        assert sum(w) == 0
        assert from_triple(w) == v
        assert asymmetric_norm(v) == max(w[0] - w[1], w[1] - w[2], w[2] - w[0])
    try:
        from_triple((1, 1, 1))
        assert False, "expected LatticeDomainError"
    except LatticeDomainError:
        pass
    print("✅ Triple view round-trips and reproduces the norm")


def test_norm_is_homogeneous_and_subadditive():
    rng = np.random.default_rng(3)
    for p1, q1, p2, q2, factor in rng.integers(-40, 41, size=(2000, 5)):
        v, w = DualVector(int(p1), int(q1)), DualVector(int(p2), int(q2))
        assert asymmetric_norm(v + w) <= asymmetric_norm(v) + asymmetric_norm(w)
        scale = abs(int(factor))
        assert asymmetric_norm(v.scaled(scale)) == scale * asymmetric_norm(v)
        if not v.is_zero():
            assert asymmetric_norm(v) > 0
    print("✅ Norm is positively homogeneous, subadditive and definite")


def test_norm_is_linear_on_cones():
    """Vectors in the same closed cone add their norms."""
    cones = [(B2, B3), (B3, B1), (B1, B2)]
    rng = np.random.default_rng(5)
    for bj, bk in cones:
        for a, b, c, d in rng.integers(0, 20, size=(200, 4)):
            v = bj.scaled(int(a)) + bk.scaled(int(b))
            w = bj.scaled(int(c)) + bk.scaled(int(d))
            assert asymmetric_norm(v + w) == asymmetric_norm(v) + asymmetric_norm(w)
            assert asymmetric_norm(v) == a + b
    print("✅ Norm is linear on each cone of the fan")


def test_cone_partition():
    """Every non-zero vector lies in exactly one half-open cone."""
    assert cone_index(B2).index == 1 and not cone_index(B2).interior
    assert cone_index(B3).index == 2 and not cone_index(B3).interior
    assert cone_index(B1).index == 3 and not cone_index(B1).interior
    assert cone_index(DualVector(-1, -1)) == (1, True)
    for p in range(-6, 7):
        for q in range(-6, 7):
            if p == 0 and q == 0:
                continue
            index = cone_index(DualVector(p, q)).index
            memberships = [p < 0 and q <= 0, p >= 0 and q < p, q > 0 and p <= q]
            assert memberships.count(True) == 1
            assert memberships.index(True) + 1 == index
    try:
        cone_index(DualVector(0, 0))
        assert False, "expected LatticeDomainError"
    except LatticeDomainError:
        pass
    print("✅ Half-open cones partition the non-zero dual vectors")


def test_lattice_length_and_primitive_part():
    assert lattice_length(DualVector(0, 0)) == 0
    assert lattice_length(DualVector(4, -6)) == 2
    assert primitive_part(DualVector(4, -6)) == DualVector(2, -3)
    assert is_primitive(DualVector(-1, 0))
    assert not is_primitive(DualVector(2, 2))
    rng = np.random.default_rng(8)
    for p, q in rng.integers(-30, 31, size=(300, 2)):
        v = DualVector(int(p), int(q))
        if v.is_zero():
            continue
        assert primitive_part(v).scaled(lattice_length(v)) == v
    try:
        primitive_part(DualVector(0, 0))
        assert False, "expected LatticeDomainError"
    except LatticeDomainError:
        pass
    print("✅ Lattice length and primitive part decompose every vector")


def test_totients():
    assert totient(1) == 1
    assert totient(12) == 4
    assert totient(97) == 96
    table = totient_table(200)
    assert all(int(table[l]) == totient(l) for l in range(1, 201))
    assert totient_sums(4) == (6, 17)
    assert totient_sums(0) == (0, 0)
    try:
        totient(0)
        assert False, "expected LatticeDomainError"
    except LatticeDomainError:
        pass
    print("✅ Totient, sieve and prefix sums agree")


def test_level_sets():
    """Exactly 3*phi(l) primitive vectors have norm l."""
    assert set(primitive_vectors_of_norm(1)) == {B1, B2, B3}
    assert len(primitive_vectors_of_norm(3)) == 6
    assert first_cone_vectors_of_norm(3) == [DualVector(-1, -2), DualVector(-2, -1)]
    for level in range(1, 41):
        vectors = primitive_vectors_of_norm(level)
        assert len(vectors) == 3 * totient(level)
        assert len(set(vectors)) == len(vectors)
        assert all(is_primitive(v) and asymmetric_norm(v) == level for v in vectors)
    # cross-check the count by scanning a box that contains the whole level set
    for level in range(1, 9):
        scanned = [
            DualVector(p, q)
            for p in range(-level, level + 1)
            for q in range(-level, level + 1)
            if is_primitive(DualVector(p, q)) and norm_pq(p, q) == level
        ]
        assert sorted(scanned) == sorted(primitive_vectors_of_norm(level))
    try:
        primitive_vectors_of_norm(0)
        assert False, "expected LatticeDomainError"
    except LatticeDomainError:
        pass
    print("✅ Level sets have 3*phi(l) members for l <= 40")


def test_cyclic_rotation():
    assert cyclic_rotate(B1) == B2
    assert cyclic_rotate(B2) == B3
    assert cyclic_rotate(B3) == B1
    rng = np.random.default_rng(2)
    for p, q in rng.integers(-25, 26, size=(300, 2)):
        v = DualVector(int(p), int(q))
        r1 = cyclic_rotate(v)
        r2 = cyclic_rotate(r1)
        assert cyclic_rotate(r2) == v
        assert asymmetric_norm(r1) == asymmetric_norm(v)
        assert is_primitive(r1) == is_primitive(v)
        assert (v + r1 + r2).is_zero()
    print("✅ Cyclic rotation has order 3 and preserves norm and primitivity")


def main():
    """Run all tests."""
    print("=" * 60)
    print("🧪 LATTICE CORE TESTS")
    print("=" * 60)
    print()

    tests = [
        test_norm_of_fan_generators,
        test_closed_form_matches_membership_oracle,
        test_triple_view,
        test_norm_is_homogeneous_and_subadditive,
        test_norm_is_linear_on_cones,
        test_cone_partition,
        test_lattice_length_and_primitive_part,
        test_totients,
        test_level_sets,
        test_cyclic_rotation,
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
