"""Orbits of rank-1 groups <xi> x| M acting on the complex line.

These orbit counts drive the positive side of the classification: two
fixed-point coordinates in the same orbit produce a weighted-transposition
mirror through the fixed space.
"""

from fractions import Fraction

from crystref import Ring, ScalarModule, module_window, orbit_classes, orbit_equiv

# half-Eisenstein points under the hexagonal rotation group over Z[w]:
# exactly two orbits, one of which is the lattice itself
r6 = Ring(6)
w = r6.root(2)
zw = ScalarModule(r6, [r6.one(), w])
half = ScalarModule(r6, [r6.rational(Fraction(1, 2)), w * Fraction(1, 2)])
pts = module_window(half, Fraction(2))
classes = orbit_classes(r6, zw, pts)
print(f"(1/2)Z[w] window: {len(pts)} points fall into {len(classes)} orbits")
for cls in classes:
    tag = "the lattice orbit" if any(p.is_zero() for p in cls) else "the rest"
    print(f"  {len(cls):3d} points - {tag}")

# odd-odd half-Gaussian vertices all lie in one orbit (rotations included)
r4 = Ring(4)
h = Fraction(1, 2)
lam = ScalarModule(r4, [r4.scalar(h, h), r4.scalar(-h, h)])
odd = [p for p in module_window(lam, Fraction(7, 2))
       if p.a.denominator == 2 and p.b.denominator == 2]
print(f"\nodd-odd half-Gaussian vertices: {len(odd)} points,",
      f"{len(orbit_classes(r4, lam, odd))} orbit")

# the triangular picture at r = 3 splits into two vertex orbits instead -
# this is exactly why the index-2 lattice of the r = 3 family fails
r3 = Ring(3)
third = ScalarModule(r3, [r3.rational(Fraction(1, 3)), r3.xi() * Fraction(1, 3)])
inv = (r3.one() - r3.xi()).inverse()
lam3 = ScalarModule(r3, [inv, inv * r3.xi()])
verts = [p for p in module_window(third, Fraction(2)) if not lam3.contains(p)]
cl3 = orbit_classes(r3, lam3, verts)
print(f"r = 3 triangle vertices: {len(verts)} points, {len(cl3)} orbits")

z = inv * inv          # 1/(1-w)^2
wbar = inv * inv * r3.root(2)
print("\nsample orbit queries (r = 3, module (1/(1-w))Z[w]):")
print("  1/(1-w)^2 ~ w/(1-w)^2 :", orbit_equiv(r3, lam3, z, wbar))
print("  1/(1-w)^2 ~ -1/(1-w)^2:", orbit_equiv(r3, lam3, z, -z))
