"""Saturated sets, the vertex-maximal family, and bounds on A(n).

A saturated set is S_{<=q} (all primitive dual vectors of norm at most q)
plus a proper subset R of the primitive vectors of norm q + 1. Balanced
saturated sets give vertex-maximal polygons with

    f0 = 3 * sum_{l<=q} phi(l) + |R|
    n  = sum_{l<=q} l * phi(l) + (q + 1) * |R| / 3
"""

import logging
import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, List, NamedTuple

from models.errors import ConfigurationValidationError, LatticeDomainError
from models.lattice import DualVector
from models.polytope import Polytope, VectorConfiguration
from models.saturated import ABound, SaturatedSet

from .lattice_core import (
    asymmetric_norm,
    cyclic_rotate,
    first_cone_vectors_of_norm,
    is_primitive,
    primitive_vectors_of_norm,
    totient,
    totient_sums,
)
from .polytope import reconstruct

logger = logging.getLogger(__name__)

ASYMPTOTIC_TARGET = 9 ** 3 / (2 * math.pi) ** 2


class AsymptoticRatio(NamedTuple):
    """f0(P_q)^3 / n(P_q)^2 compared with its limit 9^3 / (2 pi)^2."""
    q: int
    f0: int
    n: int
    ratio: Fraction
    target: float
    deviation: float


def make_saturated_set(q: int, extras: Iterable[DualVector] = ()) -> SaturatedSet:
    """Validated SaturatedSet constructor."""
    if q < 0:
        raise LatticeDomainError(f"Norm bound must be non-negative, got {q}")
    items = tuple(extras)
    if len(set(items)) != len(items):
        raise ConfigurationValidationError("Saturated set extras must be distinct")
    for v in items:
        if not is_primitive(v):
            raise ConfigurationValidationError(f"Saturated set member {v} is not primitive")
        if asymmetric_norm(v) != q + 1:
            raise ConfigurationValidationError(f"Extra {v} has norm {asymmetric_norm(v)}, expected {q + 1}")
    if len(items) >= 3 * totient(q + 1):
        raise ConfigurationValidationError(
            f"R must be a proper subset of the norm-{q + 1} level ({3 * totient(q + 1)} vectors)"
        )
    return SaturatedSet(q=q, extras=items)


def s_leq(q: int) -> SaturatedSet:
    """All primitive dual vectors of norm at most q."""
    return make_saturated_set(q)


def full_set(saturated: SaturatedSet) -> List[DualVector]:
    """The members of S, level by level in canonical order, then R."""
    vectors: List[DualVector] = []
    for level in range(1, saturated.q + 1):
        vectors.extend(primitive_vectors_of_norm(level))
    vectors.extend(saturated.extras)
    return vectors


def configuration_of(saturated: SaturatedSet) -> VectorConfiguration:
    return VectorConfiguration.of(full_set(saturated))


def decompose_count(k: int):
    """Unique (q, r) with k = sum_{l<=q} phi(l) + r and 0 <= r < phi(q + 1)."""
    if k < 0:
        raise LatticeDomainError(f"k must be non-negative, got {k}")
    q, covered = 0, 0
    while covered + totient(q + 1) <= k:
        q += 1
        covered += totient(q)
    return q, k - covered


def build_qk(k: int) -> SaturatedSet:
    """The balanced saturated set with 3k members.

    R consists of the first r norm-(q+1) vectors of C~1 in canonical order
    and their two cyclic images.
    """
    if k < 1:
        raise LatticeDomainError(f"build_qk needs k >= 1, got {k}")
    q, r = decompose_count(k)
    chosen = first_cone_vectors_of_norm(q + 1)[:r]
    extras = chosen + [cyclic_rotate(v) for v in chosen] + [cyclic_rotate(cyclic_rotate(v)) for v in chosen]
    logger.debug(f"Q_{k}: q={q}, r={r}")
    return make_saturated_set(q, extras)


def polytope_of(saturated: SaturatedSet) -> Polytope:
    """The unique polygon whose D-map is the balanced saturated set."""
    if not saturated.is_balanced:
        raise ConfigurationValidationError(
            f"Saturated set with q={saturated.q} and |R|={len(saturated.extras)} is not balanced"
        )
    return reconstruct(configuration_of(saturated))


def f0_formula(saturated: SaturatedSet) -> int:
    phi_sum, _ = totient_sums(saturated.q)
    return 3 * phi_sum + len(saturated.extras)


def n_formula(saturated: SaturatedSet) -> Fraction:
    """Simplicial diameter by formula; an integer whenever S is balanced."""
    _, weighted_sum = totient_sums(saturated.q)
    return weighted_sum + Fraction((saturated.q + 1) * len(saturated.extras), 3)


def saturated_norm_sum(k: int) -> int:
    """Minimal norm sum of a k-element configuration: 3 sum l*phi(l) + (q+1)|R|."""
    if k < 0:
        raise LatticeDomainError(f"k must be non-negative, got {k}")
    q, level_total, norm_total = 0, 0, 0
    while level_total + 3 * totient(q + 1) <= k:
        q += 1
        level_total += 3 * totient(q)
        norm_total += 3 * q * totient(q)
    return norm_total + (q + 1) * (k - level_total)


def saturated_decomposition(vectors: Iterable[DualVector]) -> SaturatedSet:
    """Recognize a saturated set and return its (q, R) decomposition."""
    items = list(vectors)
    if len(set(items)) != len(items):
        raise ConfigurationValidationError("Vectors must be distinct")
    for v in items:
        if not is_primitive(v):
            raise ConfigurationValidationError(f"{v} is not primitive, so the set is not saturated")
    levels = Counter(asymmetric_norm(v) for v in items)
    q = 0
    while levels.get(q + 1, 0) == 3 * totient(q + 1):
        q += 1
    outside = [v for v in items if asymmetric_norm(v) > q + 1]
    if outside:
        raise ConfigurationValidationError(
            f"Not saturated: level {q + 1} is incomplete but {outside[0]} has norm {asymmetric_norm(outside[0])}"
        )
    extras = [v for v in items if asymmetric_norm(v) == q + 1]
    return make_saturated_set(q, extras)


def a_bounds(n: int) -> ABound:
    """Exact value or inclusive bounds for A(n) from the saturated family."""
    if n < 1:
        raise LatticeDomainError(f"A(n) is defined for n >= 1, got {n}")
    q, phi_sum, weighted_sum = 0, 0, 0
    while weighted_sum + (q + 1) * totient(q + 1) <= n:
        q += 1
        phi_sum += totient(q)
        weighted_sum += q * totient(q)
    r = min(totient(q + 1) - 1, (n - weighted_sum) // (q + 1))
    lower = 3 * phi_sum + 3 * r
    if weighted_sum + r * (q + 1) == n:
        return ABound(n=n, lower=lower, upper=lower, exact=True, q=q, r=r)
    # The strict bound A(n) < lower + 3 becomes an inclusive integer bound.
    return ABound(n=n, lower=lower, upper=lower + 2, exact=False, q=q, r=r)


def asymptotic_ratio(q: int) -> AsymptoticRatio:
    """Exact f0^3 / n^2 for P_q = P_{S<=q}, with the floating deviation from the limit."""
    if q < 1:
        raise LatticeDomainError(f"asymptotic_ratio needs q >= 1, got {q}")
    saturated = s_leq(q)
    f0 = f0_formula(saturated)
    n = int(n_formula(saturated))
    ratio = Fraction(f0 ** 3, n ** 2)
    deviation = abs(float(ratio) - ASYMPTOTIC_TARGET) / ASYMPTOTIC_TARGET
    return AsymptoticRatio(q=q, f0=f0, n=n, ratio=ratio, target=ASYMPTOTIC_TARGET, deviation=deviation)


def table_row(n: int) -> dict:
    """One row of the A(n) table from the formulas alone; value is None unless exact."""
    bound = a_bounds(n)
    if bound.exact:
        return {"n": n, "bound": bound, "value": bound.lower, "source": "formula"}
    return {"n": n, "bound": bound, "value": None, "source": "bounds"}
