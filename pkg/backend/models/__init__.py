"""Data models for lattice polygons, searches and tropical curves."""

from .lattice import DualVector, LatticePoint
from .polytope import Polytope, VectorConfiguration
from .saturated import ABound, SaturatedSet
from .search import SearchLimits, SearchOptions, SearchResult, SearchStatus
from .tropical import DegreeReport, Ray, TropicalCurve

__all__ = [
    'DualVector', 'LatticePoint', 'Polytope', 'VectorConfiguration', 'ABound', 'SaturatedSet',
    'SearchLimits', 'SearchOptions', 'SearchResult', 'SearchStatus', 'DegreeReport', 'Ray', 'TropicalCurve',
]
