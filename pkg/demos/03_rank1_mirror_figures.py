"""Rank-1 mirror arrangements as figures.

For a rank-1 group the mirrors are points of the complex line.  The window
computation is exact (rational box tests); only the SVG rendering rounds.

Writes gaussian_mirrors.svg and eisenstein_mirrors.svg next to this script.
"""

import pathlib

from crystref import build_group, rank1_window
from crystref.svgplot import render_window

here = pathlib.Path(__file__).resolve().parent

for name, fname in [("[G(4,1,1)]_1", "gaussian_mirrors.svg"),
                    ("[G(6,1,1)]_1", "eisenstein_mirrors.svg")]:
    spec = build_group(name)
    lattice_pts, mirror_pts = rank1_window(spec, 3)
    svg = render_window(lattice_pts, mirror_pts, 3)
    out = here / fname
    out.write_text(svg)
    print(f"{name}: {len(lattice_pts)} lattice points (large dots), "
          f"{len(mirror_pts)} mirror points (small dots) -> {out.name}")

# the r = 4 mirror set is exactly the half-integer Gaussian points
spec = build_group("[G(4,1,1)]_1")
_, mirrors = rank1_window(spec, 1)
print("\nmirror points of the Gaussian group in the unit window:")
print("  " + ", ".join(p.text() for p in mirrors))
