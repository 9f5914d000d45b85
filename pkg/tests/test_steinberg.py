"""Verification engine: orbits, lemma witnesses, verdicts, sweeps."""

from fractions import Fraction

import pytest

from crystref import (NO_FIXED_POINT, ON_HYPERPLANE, REFLECTION_POWER,
                      VIOLATION, AffineMap, CrystrefError,
                      ExpectedPositiveGroup, Monomial, NotAMember, Ring,
                      ScalarModule, Vector, build_group, catalog_ids,
                      check_counterexample, compose, fixed_space,
                      module_window, orbit_classes, orbit_equiv, power,
                      subspace_satisfies_form, sweep, sweep_exact,
                      verify_element, witness_from_conditions,
                      witness_from_cycle)


def _half_gaussian_module(r4):
    h = Fraction(1, 2)
    return ScalarModule(r4, [r4.scalar(h, h), r4.scalar(-h, h)])


def test_orbit_equiv_examples():
    r4 = Ring(4)
    lam = _half_gaussian_module(r4)
    z = r4.scalar(Fraction(1, 2), Fraction(1, 2))
    w = r4.scalar(Fraction(3, 2), Fraction(1, 2))
    assert orbit_equiv(r4, lam, z, w) == 0
    assert orbit_equiv(r4, lam, z, z) == 0
    r3 = Ring(3)
    zw = ScalarModule(r3, [r3.one(), r3.xi()])
    assert orbit_equiv(r3, zw, (r3.one() - r3.xi()).inverse(), r3.zero()) is None


def test_orbit_relation_is_symmetric_and_transitive(rng):
    r6 = Ring(6)
    w = r6.root(2)
    mod = ScalarModule(r6, [r6.one(), w])
    pts = module_window(ScalarModule(
        r6, [r6.rational(Fraction(1, 2)), w * Fraction(1, 2)]), Fraction(3, 2))
    for a in pts:
        for b in pts:
            ab = orbit_equiv(r6, mod, a, b)
            ba = orbit_equiv(r6, mod, b, a)
            assert (ab is None) == (ba is None)
    classes = orbit_classes(r6, mod, pts)
    for cls in classes:
        for a in cls:
            for b in cls:
                assert orbit_equiv(r6, mod, a, b) is not None


def test_orbit_classes_two_orbit_fact():
    # the half-Eisenstein window splits into the lattice orbit and one other
    r6 = Ring(6)
    w = r6.root(2)
    zw = ScalarModule(r6, [r6.one(), w])
    half = ScalarModule(r6, [r6.rational(Fraction(1, 2)), w * Fraction(1, 2)])
    pts = module_window(half, Fraction(2))
    classes = orbit_classes(r6, zw, pts)
    assert len(classes) == 2
    lattice_class = next(c for c in classes if any(p.is_zero() for p in c))
    for p in pts:
        assert (p in lattice_class) == zw.contains(p)


def test_orbit_classes_single_point():
    r4 = Ring(4)
    assert orbit_classes(r4, _half_gaussian_module(r4), [r4.one()]) == [[r4.one()]]


def test_witness_from_cycle_examples():
    spec = build_group("[G(4,1,2)]_1")
    r4 = spec.ring
    g = AffineMap.linear(Monomial.from_cycles(r4, 2, [[1, 2]]))
    wit = witness_from_cycle(spec, g)
    assert wit is not None
    assert wit.constant.is_zero()
    assert wit.reflection.lin == g.lin
    # a 3-cycle with a lattice translation in the symmetric-group family
    wa = build_group("[W(A(2))]^a_1")
    ring = wa.ring
    t = wa.lattice.zbasis[1] + wa.lattice.zbasis[2]
    g3 = AffineMap(Monomial.from_cycles(ring, 3, [[1, 2, 3]]), t)
    wit3 = witness_from_cycle(wa, g3)
    assert wit3 is not None
    space = fixed_space(g3)
    assert subspace_satisfies_form(space, wit3.family.form, wit3.constant)
    # diagonal linear parts are out of scope for this construction
    diag = AffineMap.linear(Monomial.diagonal(r4, [1, 0]))
    assert witness_from_cycle(spec, diag) is None


def test_witness_from_conditions_condition3():
    # both fixed-point coordinates odd-odd half-Gaussian: orbit condition fires
    spec = build_group("[G(4,1,2)]_2")
    r4 = spec.ring
    h = Fraction(1, 2)
    t = Vector(r4, [r4.scalar(h, h), r4.scalar(h, -h)])
    g = AffineMap(Monomial.diagonal(r4, [2, 2]), t)
    assert spec.is_member(g)
    wit = witness_from_conditions(spec, g)
    assert wit is not None
    assert not wit.family.form.is_coordinate
    space = fixed_space(g)
    assert subspace_satisfies_form(space, wit.family.form, wit.constant)
    v = verify_element(spec, g)
    assert v.outcome in (ON_HYPERPLANE, REFLECTION_POWER)


def test_witness_from_conditions_condition1():
    # r = 6, p = 2: an element of order > p whose p-th power lands in the
    # lattice on one coordinate
    spec = build_group("[G(6,2,2)]_1")
    r6 = spec.ring
    g = AffineMap(Monomial.diagonal(r6, [2, 4]),
                  Vector(r6, [r6.one(), r6.one()]))
    assert spec.is_member(g)
    assert not power(g, 2).is_identity()
    wit = witness_from_conditions(spec, g)
    assert wit is not None
    assert wit.family.form.is_coordinate
    space = fixed_space(g)
    assert subspace_satisfies_form(space, wit.family.form, wit.constant)


def test_witness_from_conditions_condition2():
    # an involution with eigenvalue -1 entries: g^p = 1 at p = 2
    spec = build_group("[G(6,2,2)]_1")
    r6 = spec.ring
    t = Vector(r6, [r6.rational(2), r6.scalar(1, 1)])
    g = AffineMap(Monomial.diagonal(r6, [3, 3]), t)
    assert spec.is_member(g) and power(g, 2).is_identity()
    wit = witness_from_conditions(spec, g)
    assert wit is not None
    space = fixed_space(g)
    assert subspace_satisfies_form(space, wit.family.form, wit.constant)


def test_witness_from_conditions_identity_absent():
    spec = build_group("[G(6,2,2)]_1")
    g = AffineMap.translation(spec.lattice.zbasis[0])
    assert witness_from_conditions(spec, g) is None


def test_componentwise_solvability_matches_dense_solver(rng):
    from crystref.steinberg import has_fixed_point_componentwise
    from conftest import random_affine
    for ring in (Ring(3), Ring(4), Ring(6), Ring(2, True)):
        for n in (1, 2, 3):
            for _ in range(60):
                g = random_affine(rng, ring, n, with_alpha=True)
                assert has_fixed_point_componentwise(g) == \
                    (not fixed_space(g).is_empty), g.text()


def test_verify_element_examples():
    s632 = build_group("[G(6,3,2)]_2")
    v = verify_element(s632, s632.counterexample)
    assert v.outcome == VIOLATION
    r6 = s632.ring
    assert v.fixed_point == Vector(
        r6, [r6.rational(Fraction(1, 2)), (r6.root(2) - 1) * Fraction(1, 2)])
    # a reflection is classified as (a power of) a reflection
    s422 = build_group("[G(4,2,2)]_3")
    refl = AffineMap.linear(s422.linear_generators[0])
    assert verify_element(s422, refl).outcome == REFLECTION_POWER
    # translations have no fixed point
    t = AffineMap.translation(s422.lattice.zbasis[0])
    assert verify_element(s422, t).outcome == NO_FIXED_POINT
    with pytest.raises(NotAMember):
        verify_element(s422, AffineMap.translation(
            Vector.basis(s422.ring, 2, 1).scale(s422.ring.rational(Fraction(1, 7)))))
    with pytest.raises(NotAMember):
        verify_element(s422, AffineMap.identity(s422.ring, 2))


def test_verify_element_d4_on_hyperplane_witness_shape():
    # diag(-1,-1) with admissible translation in the r=4 p=2 k=3 group always
    # sits on the mirror x1 + i x2 = beta, whose witness reflection carries
    # the translation beta e1 - i beta e2
    from crystref.hyperplanes import family_index, witness_reflection
    spec = build_group("[G(4,2,2)]_3")
    r4 = spec.ring
    xi = r4.xi()
    alpha, beta = r4.one(), r4.one()
    t1 = xi * alpha + beta * (r4.one() + xi)
    t2 = -alpha - beta * (r4.one() + xi)
    g = AffineMap(Monomial.diagonal(r4, [2, 2]), Vector(r4, [t1, t2]))
    assert spec.is_member(g)
    v = verify_element(spec, g)
    assert v.outcome in (ON_HYPERPLANE, REFLECTION_POWER)
    # the x1 - xi^3 x2 family (= x1 + i x2) admits exactly the constant beta
    fam = family_index(spec)[("d", 1, 2, 3)]
    space = fixed_space(g)
    val = fam.form.evaluate(space.point())
    assert val == beta
    branch = fam.admits(val)
    assert branch is not None
    refl = witness_reflection(spec, fam, branch, val)
    assert refl.tran == Vector(r4, [beta, -(xi * beta)])
    assert refl.lin == Monomial(r4, [1, 0], [-3, 3])
    assert subspace_satisfies_form(space, fam.form, val)


def test_sweep_examples():
    s412 = build_group("[G(4,1,2)]_2")
    rep = sweep(s412, bound=1)
    assert rep.violation_count == 0 and rep.exhaustive
    assert rep.examined == rep.grid_total == 32 * 81
    s312 = build_group("[G(3,1,2)]_2")
    rep2 = sweep(s312, bound=1)
    assert rep2.violation_count >= 1
    assert any(v.element == s312.counterexample for v in rep2.violations)
    s224 = build_group("[G(2,2,4)]^a_1")
    rep3 = sweep(s224, bound=1, budget=20000)
    assert not rep3.exhaustive and rep3.examined == 20000
    assert rep3.violation_count >= 1
    # the full grid is still cheap and pins the tabulated element
    rep4 = sweep(s224, bound=1, confirm_cap=50)
    assert rep4.exhaustive and rep4.examined == 1259712
    assert any(v.element == s224.counterexample for v in rep4.violations)


def test_sweep_deterministic():
    spec = build_group("[G(6,6,2)]^a_2")
    a = sweep(spec, bound=1)
    b = sweep(spec, bound=1)
    assert [v.element for v in a.violations] == [v.element for v in b.violations]
    s224 = build_group("[G(2,2,4)]^a_1")
    r1 = sweep(s224, bound=1, budget=5000)
    r2 = sweep(s224, bound=1, budget=5000)
    assert [v.element for v in r1.violations] == [v.element for v in r2.violations]


def test_fast_sweep_matches_exact_oracle():
    for name in ("[G(4,1,2)]_2", "[G(3,1,2)]_2", "[G(6,6,2)]^a_3",
                 "[G(2,1,2)]^a_4", "[G(4,2,2)]_3", "[W(A(2))]^a_1",
                 "[G(6,3,2)]_2"):
        spec = build_group(name)
        fast = sweep(spec, bound=1, confirm_cap=10 ** 9)
        slow = sweep_exact(spec, bound=1)
        assert {v.element for v in fast.violations} == \
            {v.element for v in slow.violations}, name


def test_check_counterexample_all_failing_rows():
    for gid in catalog_ids():
        spec = build_group(gid)
        if spec.expected_steinberg:
            with pytest.raises(ExpectedPositiveGroup):
                check_counterexample(spec)
        else:
            rep = check_counterexample(spec)
            assert rep["passed"], rep
            if spec.id.p == spec.id.r and spec.n == 3 and not spec.id.uses_alpha:
                assert rep["orbit_inequivalent_pairs"] == [[1, 2], [1, 3], [2, 3]]


def test_counterexample_fixed_line_case():
    # the k = 3 element at n = 3 fixes a line, not a point; the certificate
    # must exhibit a point of the line off every mirror
    spec = build_group("[G(2,1,3)]^a_3")
    space = fixed_space(spec.counterexample)
    assert space.dim == 1
    rep = check_counterexample(spec)
    assert rep["fixed_space_dimension"] == 1
    from crystref import point_on_arrangement, parse_scalar
    pt = Vector(spec.ring, [parse_scalar(spec.ring, s)
                            for s in rep["fixed_point"]])
    assert point_on_arrangement(spec, pt) is None


def test_verdict_monotone_under_powers(rng):
    # if g sits on a mirror, no power with a fixed space reports a violation
    spec = build_group("[G(6,2,2)]_2")
    els = spec.elements_of_linear_part()
    checked = 0
    while checked < 25:
        lin = rng.choice(els)
        t = Vector.zero(spec.ring, 2)
        for b in spec.lattice.zbasis:
            t = t + b.scale(spec.ring.rational(rng.randint(-1, 1)))
        g = AffineMap(lin, t)
        if g.is_identity():
            continue
        space = fixed_space(g)
        if space.is_empty:
            continue
        v = verify_element(spec, g, classify_reflection_power=False)
        if v.outcome != ON_HYPERPLANE:
            continue
        checked += 1
        for j in (2, 3):
            gj = power(g, j)
            if gj.is_identity():
                continue
            vj = verify_element(spec, gj, classify_reflection_power=False)
            assert vj.outcome != VIOLATION


def test_lemma_witnesses_never_contradict_oracle(rng):
    # random members with fixed points: a fired lemma witness forces an
    # on-hyperplane verdict
    for name in ("[G(6,2,2)]_1", "[G(4,1,2)]_2", "[G(2,2,3)]^a_1"):
        spec = build_group(name)
        els = spec.elements_of_linear_part()
        for _ in range(120):
            lin = rng.choice(els)
            t = Vector.zero(spec.ring, spec.n)
            for b in spec.lattice.zbasis:
                t = t + b.scale(spec.ring.rational(rng.randint(-1, 1)))
            g = AffineMap(lin, t)
            if g.is_identity():
                continue
            wit = witness_from_cycle(spec, g) or witness_from_conditions(spec, g)
            if wit is None:
                continue
            v = verify_element(spec, g, classify_reflection_power=False)
            assert v.outcome == ON_HYPERPLANE, (name, g.text())
            space = fixed_space(g)
            assert subspace_satisfies_form(space, wit.family.form, wit.constant)
