"""Static SVG figures of rank-1 mirror arrangements.

The exact window point sets come from hyperplanes.rank1_window; rendering is
the one place in the library where floating point appears (display only).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .scalars import Scalar

UNIT = 100              # pixels per lattice unit
LATTICE_RADIUS = 5      # px
HYPERPLANE_RADIUS = 2   # px


def _xy(point: Scalar) -> tuple[float, float]:
    r = point.ring.r
    if r == 4:
        re_xi, im_xi = 0.0, 1.0
    elif r == 3:
        re_xi, im_xi = -0.5, math.sqrt(3) / 2
    elif r == 6:
        re_xi, im_xi = 0.5, math.sqrt(3) / 2
    else:
        re_xi, im_xi = (1.0 if r == 1 else -1.0), 0.0
    return (float(point.a) + float(point.b) * re_xi, float(point.b) * im_xi)


def render_window(lattice_points: Sequence[Scalar],
                  hyperplane_points: Sequence[Scalar],
                  radius) -> str:
    """SVG document: small dots for hyperplane points, large for lattice."""
    radius = float(Fraction(radius))
    lo = -(radius + 0.5) * UNIT
    size = (2 * radius + 1) * UNIT
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{lo:.1f} {lo:.1f} {size:.1f} {size:.1f}">',
        f'<rect x="{lo:.1f}" y="{lo:.1f}" width="{size:.1f}" '
        f'height="{size:.1f}" fill="white"/>',
        '<g>',
    ]
    for pt in hyperplane_points:
        x, y = _xy(pt)
        parts.append(f'<circle cx="{x * UNIT:.2f}" cy="{-y * UNIT:.2f}" '
                     f'r="{HYPERPLANE_RADIUS}" fill="#444"/>')
    for pt in lattice_points:
        x, y = _xy(pt)
        parts.append(f'<circle cx="{x * UNIT:.2f}" cy="{-y * UNIT:.2f}" '
                     f'r="{LATTICE_RADIUS}" fill="#000"/>')
    parts.append('</g>')
    parts.append('</svg>')
    return "\n".join(parts) + "\n"
