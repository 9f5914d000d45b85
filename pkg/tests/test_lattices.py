"""Lattices and scalar modules: membership, invariance, line intersections."""

import itertools
import random
from fractions import Fraction

import pytest

from crystref import (Lattice, Monomial, RankDeficient, Ring, RingMismatch,
                      ScalarModule, Vector, ZeroDirection, build_group,
                      lattice_from_generators)


def _zx(ring):
    return (ring.one(), ring.xi())


def test_construction_examples():
    r4 = Ring(4)
    e1, e2 = Vector.basis(r4, 2, 1), Vector.basis(r4, 2, 2)
    lat = lattice_from_generators(r4, 2, [(e1, _zx(r4), "Z[x]"),
                                          (e1 - e2, _zx(r4), "Z[x]")])
    assert lat.rank == 4
    spec632 = build_group("[G(6,3,2)]_2")
    assert spec632.lattice.rank == 4
    with pytest.raises(RankDeficient):
        v = Vector.basis(r4, 1, 1)
        lattice_from_generators(r4, 1, [(v, (r4.one(),), "Z"),
                                        (v.scale(r4.rational(2)), (r4.one(),), "Z")])


def test_redundant_generators_reduce_to_basis():
    # the k = 2 lattice of the r = 4, p = 2 family lists n + 1 generators
    spec = build_group("[G(4,2,2)]_2")
    assert spec.lattice.rank == 4
    # it equals the full ring lattice, like the k = 1 lattice of G(4,1,n)
    other = build_group("[G(4,1,2)]_1")
    assert all(other.lattice.contains(b) for b in spec.lattice.zbasis)
    assert all(spec.lattice.contains(b) for b in other.lattice.zbasis)
    # whereas the k = 1 lattice of the same group is strictly smaller
    first = build_group("[G(4,2,2)]_1")
    assert all(other.lattice.contains(b) for b in first.lattice.zbasis)
    assert not all(first.lattice.contains(b) for b in other.lattice.zbasis)


def test_contains_examples():
    spec = build_group("[G(3,1,2)]_2")
    r3 = spec.ring
    c = (r3.one() - r3.xi()).inverse()
    e1, e2 = Vector.basis(r3, 2, 1), Vector.basis(r3, 2, 2)
    assert spec.lattice.contains((e1 - e2).scale(c))
    assert spec.lattice.contains(Vector.zero(r3, 2))
    assert not spec.lattice.contains(e1.scale(r3.rational(Fraction(1, 2))))


def test_zbasis_group_closure(rng):
    for name in ("[G(4,1,2)]_2", "[G(6,3,2)]_2", "[G(2,1,2)]^a_2",
                 "[G(6,6,2)]^a_3"):
        lat = build_group(name).lattice
        for b in lat.zbasis:
            assert lat.contains(b)
            assert lat.contains(-b)
        for _ in range(20):
            b1, b2 = rng.choice(lat.zbasis), rng.choice(lat.zbasis)
            assert lat.contains(b1 + b2)


def test_invariance_examples():
    spec = build_group("[G(6,3,2)]_2")
    for m in spec.linear_generators:
        assert spec.lattice.is_invariant(m)
    # full-group invariance of the r = 6 k = 1 lattices
    for name in ("[G(6,2,2)]_1", "[G(6,3,2)]_1"):
        spec = build_group(name)
        assert spec.invariant_under_full_group()
    # mismatched rings raise
    r3 = Ring(3)
    e1, e2 = Vector.basis(r3, 2, 1), Vector.basis(r3, 2, 2)
    lat = lattice_from_generators(r3, 2, [(e1, _zx(r3), "Z[x]"),
                                          (e2, _zx(r3), "Z[x]")])
    with pytest.raises(RingMismatch):
        lat.is_invariant(Monomial.diagonal(Ring(4), [1, 0]))


def test_line_intersection_examples():
    spec = build_group("[G(4,1,2)]_2")
    r4 = spec.ring
    e1, e2 = Vector.basis(r4, 2, 1), Vector.basis(r4, 2, 2)
    m = spec.lattice.line_intersection(e1 - e2)
    half = Fraction(1, 2)
    target = ScalarModule(r4, [r4.scalar(half, half), r4.scalar(-half, half)])
    assert m.same_module(target)
    spec1 = build_group("[G(4,1,2)]_1")
    m1 = spec1.lattice.line_intersection(e1)
    assert m1.same_module(ScalarModule(r4, list(_zx(r4))))
    # a direction off every lattice line yields the zero module
    low = lattice_from_generators(r4, 2, [(e1 - e2, _zx(r4), "Z[x]")], rank=2)
    assert low.line_intersection(e1).is_zero()
    with pytest.raises(ZeroDirection):
        low.line_intersection(Vector.zero(r4, 2))


def test_line_intersection_soundness_and_completeness(rng):
    for name in ("[G(4,1,2)]_2", "[G(3,1,2)]_2", "[G(6,2,2)]_2",
                 "[G(2,1,2)]^a_3", "[G(6,6,2)]^a_2"):
        spec = build_group(name)
        ring = spec.ring
        w = Vector.basis(ring, 2, 1) - Vector.basis(ring, 2, 2)
        mod = spec.lattice.line_intersection(w)
        for t in mod.gens:
            assert spec.lattice.contains(w.scale(t)), (name, t.text())
        # completeness spot check against small scalar combinations
        basis = ring.basis_scalars()
        for _ in range(60):
            x = ring.zero()
            for b in basis:
                x = x + b * Fraction(rng.randint(-2, 2), rng.choice((1, 2, 3)))
            assert mod.contains(x) == spec.lattice.contains(w.scale(x)), \
                (name, x.text())


def test_module_membership_examples():
    r3 = Ring(3)
    one, w = r3.one(), r3.xi()
    zw = ScalarModule(r3, [one, w])
    assert zw.contains(r3.scalar(2, 1))
    m = ScalarModule(r3, [one - w, (one - w) * w])   # the index-3 ideal
    assert not m.contains(one)
    assert m.contains(r3.scalar(1, 2))
    assert m.contains(r3.scalar(2, 1))
    # the ideal is the congruence a + b = 0 mod 3
    for a in range(-3, 4):
        for b in range(-3, 4):
            assert m.contains(r3.scalar(a, b)) == ((a + b) % 3 == 0)


def test_module_zero_and_scaled():
    r4 = Ring(4)
    zero = ScalarModule(r4, [])
    assert zero.contains(r4.zero())
    assert not zero.contains(r4.one())
    zi = ScalarModule(r4, list(_zx(r4)))
    half = zi.scaled(r4.rational(Fraction(1, 2)))
    assert half.contains(r4.scalar(Fraction(1, 2), Fraction(3, 2)))
    assert not half.contains(r4.scalar(Fraction(1, 3)))
    assert half.includes(zi) and not zi.includes(half)


def test_catalog_row_invariance():
    # every catalogued lattice is stable under every linear generator
    from crystref import catalog_ids
    for gid in catalog_ids():
        spec = build_group(gid)
        for m in spec.linear_generators:
            assert spec.lattice.is_invariant(m), spec.name


def test_lattice_serialization_round_trip():
    spec = build_group("[G(6,6,2)]^a_3")
    d = spec.lattice.to_dict()
    assert d["rank"] == 4 and d["dimension"] == 2
    from crystref import parse_scalar
    for row, b in zip(d["zbasis"], spec.lattice.zbasis):
        got = [parse_scalar(spec.ring, s) for s in row]
        assert got == list(b.coords)
