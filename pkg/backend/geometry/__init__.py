"""Exact lattice geometry: the asymmetric norm, polygons and saturated sets."""
