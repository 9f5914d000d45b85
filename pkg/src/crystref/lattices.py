"""Z-lattices in C^n given by module generators, with exact membership,
invariance checks and line intersections; plus rank-<=4 modules of scalars.

A lattice is stored as a Z-basis of vectors; membership is an exact rational
solve against the flattened basis followed by an integrality check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import linalg
from .affine import Monomial, Vector
from .errors import DimensionMismatch, RankDeficient, RingMismatch, ZeroDirection
from .scalars import Ring, Scalar


class ScalarModule:
    """Finitely generated additive subgroup of the scalar space, presented by
    a Z-independent generator list (possibly empty: the zero module)."""

    __slots__ = ("ring", "gens", "_solver", "_key")

    def __init__(self, ring: Ring, gens: Iterable[Scalar]):
        gens = tuple(gens)
        for g in gens:
            if g.ring is not ring:
                raise RingMismatch("module generator from a different ring")
        rows = [list(g.coordinates()) for g in gens]
        if gens and linalg.frac_rank(rows) != len(gens):
            raise RankDeficient("module generators are not Z-independent")
        self.ring = ring
        self.gens = gens
        self._solver = None
        self._key = None

    @property
    def rank(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, x: Scalar) -> bool:
        """True iff x is a Z-combination of the generators."""
        if x.ring is not self.ring:
            raise RingMismatch("membership across rings")
        if not self.gens:
            return x.is_zero()
        if self._solver is None:
            self._solver = linalg.RowSolver([list(g.coordinates()) for g in self.gens])
        return self._solver.solve_integral(list(x.coordinates())) is not None

    __contains__ = contains

    def coefficients(self, x: Scalar) -> Optional[list[int]]:
        """Integer coordinates of x in the generator basis, if any."""
        if not self.gens:
            return [] if x.is_zero() else None
        if self._solver is None:
            self._solver = linalg.RowSolver([list(g.coordinates()) for g in self.gens])
        return self._solver.solve_integral(list(x.coordinates()))

    def scaled(self, s: Scalar) -> "ScalarModule":
        """The module s * M."""
        return ScalarModule(self.ring, [s * g for g in self.gens])

    def includes(self, other: "ScalarModule") -> bool:
        return all(self.contains(g) for g in other.gens)

    def same_module(self, other: "ScalarModule") -> bool:
        """Two-sided inclusion (exact equality as subgroups)."""
        return self.includes(other) and other.includes(self)

    def canonical_key(self):
        """Hashable canonical form (HNF of the generator coordinate matrix)."""
        if self._key is None:
            rows = [list(g.coordinates()) for g in self.gens]
            basis, _ = linalg.frac_row_basis_hnf(rows)
            self._key = (self.ring.r, self.ring.alpha,
                         tuple(tuple(x for x in row) for row in basis))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarModule):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def text(self) -> str:
        return "<" + ", ".join(g.text() for g in self.gens) + ">"

    def __repr__(self) -> str:
        return f"ScalarModule{self.text()}"


class Lattice:
    """Z-lattice given by a Z-basis of vectors in C^n."""

    __slots__ = ("ring", "n", "zbasis", "generators", "_solver")

    def __init__(self, ring: Ring, n: int, zbasis: Sequence[Vector],
                 generators: Sequence[tuple[Vector, tuple[Scalar, ...], str]] = ()):
        self.ring = ring
        self.n = n
        self.zbasis = tuple(zbasis)
        self.generators = tuple(generators)
        self._solver = None

    @property
    def rank(self) -> int:
        return len(self.zbasis)

    def _get_solver(self) -> linalg.RowSolver:
        if self._solver is None:
            self._solver = linalg.RowSolver([list(b.flat()) for b in self.zbasis])
        return self._solver

    def contains(self, v: Vector) -> bool:
        """Exact membership: integral coordinates in the Z-basis."""
        if v.ring is not self.ring:
            raise RingMismatch("vector from a different ring")
        if v.n != self.n:
            raise DimensionMismatch(f"{self.n} vs {v.n}")
        return self._get_solver().solve_integral(list(v.flat())) is not None

    __contains__ = contains

    def coefficients(self, v: Vector) -> Optional[list[int]]:
        if v.n != self.n or v.ring is not self.ring:
            return None
        return self._get_solver().solve_integral(list(v.flat()))

    def is_invariant(self, m: Monomial) -> bool:
        """True iff m maps every basis vector back into the lattice."""
        if m.ring is not self.ring:
            raise RingMismatch("monomial from a different ring")
        if m.n != self.n:
            raise DimensionMismatch(f"{self.n} vs {m.n}")
        return all(self.contains(m.apply(b)) for b in self.zbasis)

    def line_intersection(self, w: Vector) -> ScalarModule:
        """The module of scalars t with t*w in the lattice (saturated)."""
        if w.ring is not self.ring:
            raise RingMismatch("vector from a different ring")
        if w.n != self.n:
            raise DimensionMismatch(f"{self.n} vs {w.n}")
        if w.is_zero():
            raise ZeroDirection("line direction must be nonzero")
        if not all(x.is_cyclo() for x in w.coords):
            raise RingMismatch("line direction must be free of the parameter")
        ring = self.ring
        basis = ring.basis_scalars()
        fmat = [list(w.scale(b).flat()) for b in basis]
        zmat = [list(b.flat()) for b in self.zbasis]
        # right kernel of F cuts out the complement of span(F)
        akern = linalg.frac_right_kernel(fmat)
        if akern:
            bmat = [[sum(zrow[j] * avec[j] for j in range(len(avec)))
                     for avec in akern] for zrow in zmat]
            # column scaling to integers leaves the left kernel unchanged
            ncols = len(akern)
            from math import lcm
            scaled = []
            dens = [1] * ncols
            for c in range(ncols):
                for row in bmat:
                    dens[c] = lcm(dens[c], Fraction(row[c]).denominator)
            scaled = [[int(Fraction(row[c]) * dens[c]) for c in range(ncols)]
                      for row in bmat]
            ys = linalg.int_left_kernel(scaled)
        else:
            ys = [[int(i == j) for j in range(self.rank)] for i in range(self.rank)]
        solver = linalg.RowSolver(fmat)
        gens = []
        for y in ys:
            v = [sum(Fraction(y[i]) * zmat[i][j] for i in range(self.rank))
                 for j in range(len(zmat[0]))]
            c = solver.solve(v)
            assert c is not None
            t = ring.zero()
            for cs, b in zip(c, basis):
                t = t + b * cs
            gens.append(t)
        return ScalarModule(ring, gens)

    def to_dict(self) -> dict:
        return {
            "ring": {"r": self.ring.r, "alpha": self.ring.alpha},
            "dimension": self.n,
            "rank": self.rank,
            "generators": [
                {"vector": [x.text() for x in vec.coords],
                 "coefficients": name}
                for vec, _, name in self.generators
            ],
            "zbasis": [[x.text() for x in b.coords] for b in self.zbasis],
        }

    def __repr__(self) -> str:
        return f"Lattice(n={self.n}, rank={self.rank})"


def lattice_from_generators(ring: Ring, n: int,
                            gens: Sequence[tuple[Vector, Sequence[Scalar], str]],
                            rank: Optional[int] = None) -> Lattice:
    """Build a lattice from (vector, coefficient-module generators, label)
    triples; each pair (s, v) contributes the basis candidate s*v.

    The flattened candidates must span a module of the expected rank
    (2n unless stated otherwise); redundant generating sets are reduced to a
    canonical Hermite basis.
    """
    expected = 2 * n if rank is None else rank
    flats: list[Vector] = []
    stored = []
    for vec, coeff_gens, name in gens:
        coeff_gens = tuple(coeff_gens)
        stored.append((vec, coeff_gens, name))
        for s in coeff_gens:
            flats.append(vec.scale(s))
    rows = [list(v.flat()) for v in flats]
    got = linalg.frac_rank(rows)
    if got != expected:
        raise RankDeficient(f"expected rank {expected}, generators span {got}")
    if got == len(flats):
        zbasis = flats
    else:
        basis_rows, _ = linalg.frac_row_basis_hnf(rows)
        zbasis = [Vector.from_flat(ring, n, row) for row in basis_rows]
    return Lattice(ring, n, zbasis, stored)


def module_from_texts(ring: Ring, texts: Sequence[str]) -> ScalarModule:
    from .scalars import parse_scalar
    return ScalarModule(ring, [parse_scalar(ring, t) for t in texts])
