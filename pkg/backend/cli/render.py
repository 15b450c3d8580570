"""Static SVG figures of polygons inside n·Δ.

Drawing never feeds back into computed values; it only reads a Polytope.
"""

import io
import logging
import math
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import numpy as np
from matplotlib.figure import Figure
from matplotlib.patches import Polygon as PolygonPatch

from geometry.polytope import lattice_points, simplex
from models.polytope import Polytope

logger = logging.getLogger(__name__)

# Affine image of the canonical frame in which Δ is equilateral.
SKEW_MATRIX = np.array([[1.0, 0.5], [0.0, math.sqrt(3.0) / 2.0]])


def shear_points(points: np.ndarray, skew: bool) -> np.ndarray:
    """Map an (m, 2) array of frame coordinates to drawing coordinates."""
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    return points @ SKEW_MATRIX.T if skew else points


def render_svg(polytope: Polytope, n: int, skew: bool = False, title: Optional[str] = None) -> str:
    """SVG text showing n·Δ, its lattice points, and the polygon stroked on top."""
    frame = simplex(n)
    dots = shear_points(np.array([p.to_list() for p in lattice_points(frame)]), skew)
    outline = shear_points(np.array([v.to_list() for v in frame.vertices]), skew)
    polygon = shear_points(np.array([v.to_list() for v in polytope.vertices]), skew)

    size = 2.0 + 0.35 * n
    fig = Figure(figsize=(size, size))
    ax = fig.add_subplot(1, 1, 1)
    ax.add_patch(PolygonPatch(outline, closed=True, fill=False, edgecolor="0.55", linewidth=1.0))
    ax.scatter(dots[:, 0], dots[:, 1], s=max(2.0, 24.0 / (1 + n / 8)), color="0.25", zorder=2)
    if polytope.f0 >= 3:
        ax.add_patch(PolygonPatch(polygon, closed=True, facecolor="#cfe3f5", edgecolor="#1f4e8c",
                                  linewidth=1.6, zorder=3))
    else:
        ax.plot(polygon[:, 0], polygon[:, 1], color="#1f4e8c", linewidth=1.6, zorder=3)
    ax.scatter(polygon[:, 0], polygon[:, 1], s=30, color="#1f4e8c", zorder=4)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)

    buffer = io.StringIO()
    fig.savefig(buffer, format="svg", bbox_inches="tight")
    logger.debug(f"Rendered {polytope.f0}-vertex polygon in {n}·Δ (skew={skew})")
    return buffer.getvalue()
