"""Exact arithmetic on the lattice, its dual, and the asymmetric norm.

The dual vectors b1 = (1,1), b2 = (-1,0), b3 = (0,-1) are the primitive outer
normals of the unit triangle. Their convex hull K is the unit ball of the
asymmetric norm. Its three facets give the closed form

    ||(p, q)|| = max(2p - q, -p + 2q, -p - q)

which is linear on each cone C1 = cone(b2, b3), C2 = cone(b3, b1),
C3 = cone(b1, b2). The half-open cone C~i keeps the ray of bj and drops the
ray of bk for (i, j, k) cyclic, so the three half-open cones partition the
non-zero dual vectors.
"""

from fractions import Fraction
from math import gcd
from typing import List, NamedTuple, Tuple

import numpy as np

from models.errors import LatticeDomainError
from models.lattice import DualVector, NormValue

B1 = DualVector(1, 1)
B2 = DualVector(-1, 0)
B3 = DualVector(0, -1)

# Cone i is spanned by the two generators other than b_i, listed as (b_j, b_k).
_CONE_GENERATORS = {
    1: (B2, B3),
    2: (B3, B1),
    3: (B1, B2),
}


class ConeIndex(NamedTuple):
    """Location of a dual vector in the half-open cone partition.

    Attributes:
        index: i in {1, 2, 3} with the vector in C~i
        interior: False when the vector lies on the boundary ray kept by C~i
    """
    index: int
    interior: bool


def canonical_normal_fan() -> Tuple[DualVector, DualVector, DualVector]:
    """Return (b1, b2, b3), the primitive outer normals of the unit triangle."""
    return (B1, B2, B3)


def asymmetric_norm(v: DualVector) -> NormValue:
    """Minkowski functional of K = conv(b1, b2, b3), by its facet functionals."""
    return max(2 * v.p - v.q, -v.p + 2 * v.q, -v.p - v.q)


def norm_pq(p: int, q: int) -> int:
    """Tuple form of asymmetric_norm for hot loops."""
    a = 2 * p - q
    b = 2 * q - p
    c = -p - q
    if a >= b:
        return a if a >= c else c
    return b if b >= c else c


def _in_scaled_cone_triangle(v: DualVector, lam: int, bj: DualVector, bk: DualVector) -> bool:
    # Solve v = cj*bj + ck*bk exactly and test membership in conv(0, lam*bj, lam*bk).
    det = bj.p * bk.q - bj.q * bk.p
    cj = Fraction(v.p * bk.q - v.q * bk.p, det)
    ck = Fraction(bj.p * v.q - bj.q * v.p, det)
    return cj >= 0 and ck >= 0 and cj + ck <= lam


def brute_force_norm(v: DualVector) -> NormValue:
    """Smallest integer lam >= 0 with v in lam * K, by exact membership tests.

    Used as an oracle for asymmetric_norm.
    """
    lam = 0
    while True:
        for bj, bk in _CONE_GENERATORS.values():
            if _in_scaled_cone_triangle(v, lam, bj, bk):
                return lam
        lam += 1


def to_triple(v: DualVector) -> Tuple[int, int, int]:
    """Embed v into {w in Z^3 : w1 + w2 + w3 = 0}.

    In this view ||v|| = max(w1 - w2, w2 - w3, w3 - w1).
    """
    return (v.p, v.q - v.p, -v.q)


def from_triple(w: Tuple[int, int, int]) -> DualVector:
    """Inverse of to_triple."""
    if len(w) != 3 or sum(w) != 0:
        raise LatticeDomainError(f"Triple must have three coordinates summing to 0, got {w}")
    return DualVector(w[0], -w[2])


def lattice_length(v: DualVector) -> int:
    """gcd of the coordinates; 0 for the zero vector."""
    return gcd(v.p, v.q)


def is_primitive(v: DualVector) -> bool:
    return lattice_length(v) == 1


def primitive_part(v: DualVector) -> DualVector:
    """The primitive vector pointing in the direction of v."""
    length = lattice_length(v)
    if length == 0:
        raise LatticeDomainError("The zero vector has no primitive part")
    return DualVector(v.p // length, v.q // length)


def totient(l: int) -> int:
    """Euler's totient by trial division."""
    if l < 1:
        raise LatticeDomainError(f"totient is defined for l >= 1, got {l}")
    result = l
    m = l
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def totient_table(limit: int) -> np.ndarray:
    """Totients of 0..limit by sieve (entry 0 is unused and set to 0)."""
    if limit < 0:
        raise LatticeDomainError(f"limit must be non-negative, got {limit}")
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:
            phi[p::p] -= phi[p::p] // p
    phi[0] = 0
    return phi


def totient_sums(q: int) -> Tuple[int, int]:
    """Return (sum of phi(l), sum of l*phi(l)) over 1 <= l <= q as Python ints."""
    if q <= 0:
        return 0, 0
    phi = totient_table(q)
    levels = np.arange(q + 1, dtype=np.int64)
    return int(phi[1:].sum()), int((levels[1:] * phi[1:]).sum())


def cyclic_rotate(v: DualVector) -> DualVector:
    """The linear map b1 -> b2 -> b3 -> b1 in canonical coordinates."""
    return DualVector(-v.q, v.p - v.q)


def cone_index(v: DualVector) -> ConeIndex:
    """Locate v in the half-open cones C~1, C~2, C~3."""
    p, q = v.p, v.q
    if p == 0 and q == 0:
        raise LatticeDomainError("The zero vector lies in no half-open cone")
    # C~1 = {c2*b2 + c3*b3 : c2 > 0, c3 >= 0} = {p < 0, q <= 0}
    if p < 0 and q <= 0:
        return ConeIndex(1, q < 0)
    # C~2 = {c3*b3 + c1*b1 : c3 > 0, c1 >= 0} = {p >= 0, q < p}
    if p >= 0 and q < p:
        return ConeIndex(2, p > 0)
    # C~3 = {c1*b1 + c2*b2 : c1 > 0, c2 >= 0} = {q > 0, p <= q}
    return ConeIndex(3, p < q)


def first_cone_vectors_of_norm(l: int) -> List[DualVector]:
    """Primitive vectors of norm l in C~1, by increasing b2-coordinate."""
    if l < 1:
        raise LatticeDomainError(f"norm level must be >= 1, got {l}")
    # c2*b2 + c3*b3 = (-c2, -c3) with c2 > 0, c3 = l - c2 >= 0
    return [DualVector(-c2, -(l - c2)) for c2 in range(1, l + 1) if gcd(c2, l) == 1]


def primitive_vectors_of_norm(l: int) -> List[DualVector]:
    """All primitive dual vectors of norm l: the C~1 list, then its two cyclic images."""
    first = first_cone_vectors_of_norm(l)
    second = [cyclic_rotate(v) for v in first]
    third = [cyclic_rotate(v) for v in second]
    return first + second + third
