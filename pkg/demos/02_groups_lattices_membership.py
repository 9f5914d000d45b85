"""Building catalogued groups: lattices, generators, exact membership.

A catalogued group is a finite monomial group acting on C^n together with an
invariant lattice of translations; elements are pairs (linear part, vector).
"""

from crystref import AffineMap, Monomial, Vector, build_group, compose

spec = build_group("[G(6,3,2)]_2")
print("group:", spec.name)
print("ring:", spec.ring)
print("expected fixed-point property:", spec.expected_steinberg)
print("lattice rank:", spec.lattice.rank)
for vec, _, coeff in spec.lattice.generators:
    print(f"  generator  {coeff:8s} * {vec}")

print("\nlinear generators (the three matrices of the standard presentation):")
for m in spec.linear_generators:
    print("  ", m.text())

# membership is an exact lattice solve
r6 = spec.ring
t = Vector(r6, [r6.one(), r6.root(2) - 1])
g = AffineMap(Monomial.diagonal(r6, [3, 3]), t)     # -v + (1, w - 1)
print("\ncandidate element:", g.text())
print("is a member:", spec.is_member(g))

bad = AffineMap.linear(Monomial.diagonal(r6, [1, 0]))
print("diag(xi, 1) is a member:", spec.is_member(bad), " (weight condition fails)")

# the group is closed under composition, exactly
h = AffineMap.linear(spec.linear_generators[2])
print("g . h is a member:", spec.is_member(compose(g, h)))

# enumeration at desk scale
els = spec.elements_of_linear_part()
print("\n|G(6,3,2)| =", len(els), "(= 6^2 * 2! / 3)")

# the symmetric-group family lives in ambient C^n with a rank-2(n-1) lattice
wa = build_group("[W(A(2))]^a_1")
print("\n", wa.name, ": lattice rank", wa.lattice.rank, "in C^3")
