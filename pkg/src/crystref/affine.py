"""Monomial matrices, affine maps g(v) = Lin(g) v + Tran(g), and their
structural predicates: finite order, reflection tests, exact fixed spaces.

Linear parts are always monomial (permutation + root-of-unity weights stored
as exponents); dense exact matrices appear only inside the linear solver for
(1 - Lin).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, EmptySubspace, RingMismatch
from .scalars import Ring, Scalar


class Vector:
    """Point/translation in C^n with exact scalar coordinates."""

    __slots__ = ("ring", "coords", "_hash")

    def __init__(self, ring: Ring, coords: Iterable[Scalar]):
        coords = tuple(coords)
        for x in coords:
            if x.ring is not ring:
                raise RingMismatch("vector coordinates from a different ring")
        self.ring = ring
        self.coords = coords
        self._hash = None

    @classmethod
    def zero(cls, ring: Ring, n: int) -> "Vector":
        return cls(ring, [ring.zero()] * n)

    @classmethod
    def basis(cls, ring: Ring, n: int, j: int) -> "Vector":
        """Standard basis vector e_j (1-indexed)."""
        coords = [ring.zero()] * n
        coords[j - 1] = ring.one()
        return cls(ring, coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(self.ring, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(self.ring, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Vector":
        return Vector(self.ring, [-a for a in self.coords])

    def scale(self, s: Scalar) -> "Vector":
        return Vector(self.ring, [s * a for a in self.coords])

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.coords)

    def flat(self) -> tuple[Fraction, ...]:
        """Rational coordinates, coordinate-major: n * flat_width entries."""
        out: list[Fraction] = []
        for x in self.coords:
            out.extend(x.coordinates())
        return tuple(out)

    @classmethod
    def from_flat(cls, ring: Ring, n: int, flat: Sequence[Fraction]) -> "Vector":
        w = ring.flat_width
        if len(flat) != n * w:
            raise DimensionMismatch("flat coordinate length mismatch")
        return cls(ring, [ring.from_coordinates(flat[i * w:(i + 1) * w])
                          for i in range(n)])

    def _check(self, other: "Vector") -> None:
        if not isinstance(other, Vector):
            raise TypeError("expected a Vector")
        if other.ring is not self.ring:
            raise RingMismatch("vectors from different rings")
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n} vs {other.n}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return (self.ring is other.ring and self.coords == other.coords)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.r, self.ring.alpha, self.coords))
        return self._hash

    def text(self) -> str:
        return "(" + ", ".join(x.text() for x in self.coords) + ")"

    __str__ = text

    def __repr__(self) -> str:
        return f"Vector{self.text()}"


class Monomial:
    """Monomial matrix: e_j maps to xi^exps[j] * e_perm[j] (0-indexed storage).

    Weights are r-th roots of unity stored as exponents, so products and
    inverses never leave the group and orders read off the cycle structure.
    """

    __slots__ = ("ring", "perm", "exps", "_hash")

    def __init__(self, ring: Ring, perm: Sequence[int], exps: Sequence[int]):
        perm = tuple(perm)
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
        if len(exps) != n:
            raise DimensionMismatch("one weight exponent per column required")
        self.ring = ring
        self.perm = perm
        self.exps = tuple(e % ring.r for e in exps)
        self._hash = None

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Monomial":
        return cls(ring, range(n), [0] * n)

    @classmethod
    def diagonal(cls, ring: Ring, exps: Sequence[int]) -> "Monomial":
        return cls(ring, range(len(exps)), exps)

    @classmethod
    def from_cycles(cls, ring: Ring, n: int, cycles: Sequence[Sequence[int]],
                    exps: Optional[Sequence[int]] = None) -> "Monomial":
        """Permutation from 1-indexed cycles, with optional diagonal exponents."""
        perm = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)([cyc[0]])):
                perm[a - 1] = b - 1
        return cls(ring, perm, exps if exps is not None else [0] * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and not any(self.exps)

    def is_diagonal(self) -> bool:
        return self.perm == tuple(range(self.n))

    def weight(self, j: int) -> Scalar:
        """The scalar weight on column j (0-indexed)."""
        return self.ring.root(self.exps[j])

    def __mul__(self, other: "Monomial") -> "Monomial":
        """Matrix product self @ other."""
        if not isinstance(other, Monomial):
            return NotImplemented
        if other.ring is not self.ring:
            raise RingMismatch("monomials from different rings")
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n} vs {other.n}")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.n))
        exps = tuple(other.exps[j] + self.exps[other.perm[j]] for j in range(self.n))
        return Monomial(self.ring, perm, exps)

    def inverse(self) -> "Monomial":
        n = self.n
        perm = [0] * n
        exps = [0] * n
        for j in range(n):
            perm[self.perm[j]] = j
            exps[self.perm[j]] = -self.exps[j]
        return Monomial(self.ring, perm, exps)

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            return self.inverse() ** (-k)
        out = Monomial.identity(self.ring, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def apply(self, v: Vector) -> Vector:
        if v.n != self.n:
            raise DimensionMismatch(f"{self.n} vs {v.n}")
        coords = [self.ring.zero()] * self.n
        for j in range(self.n):
            coords[self.perm[j]] = self.ring.root(self.exps[j]) * v[j]
        return Vector(self.ring, coords)

    def cycles(self) -> list[tuple[list[int], list[int]]]:
        """Cycle decomposition: (nodes, edge exponents); nodes 0-indexed, the
        exponent at position i weights the edge nodes[i] -> nodes[i+1]."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            nodes = []
            exps = []
            cur = start
            while not seen[cur]:
                seen[cur] = True
                nodes.append(cur)
                exps.append(self.exps[cur])
                cur = self.perm[cur]
            out.append((nodes, exps))
        return out

    def weight_exponent_sum(self) -> int:
        return sum(self.exps) % self.ring.r

    def order(self) -> int:
        from math import lcm
        r = self.ring.r
        order = 1
        for nodes, exps in self.cycles():
            length = len(nodes)
            prod = sum(exps) % r
            # cycle^length is scalar xi^prod on the block
            scalar_order = r // __import__("math").gcd(r, prod) if prod else 1
            order = lcm(order, length * scalar_order)
        return order

    def dense(self) -> list[list[Scalar]]:
        zero = self.ring.zero()
        mat = [[zero] * self.n for _ in range(self.n)]
        for j in range(self.n):
            mat[self.perm[j]][j] = self.ring.root(self.exps[j])
        return mat

    def __eq__(self, other) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return (self.ring is other.ring and self.perm == other.perm
                and self.exps == other.exps)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.r, self.perm, self.exps))
        return self._hash

    def cycle_text(self) -> str:
        parts = []
        for nodes, _ in self.cycles():
            if len(nodes) > 1:
                parts.append("(" + " ".join(str(v + 1) for v in nodes) + ")")
        return "".join(parts) if parts else "()"

    def text(self) -> str:
        weights = ", ".join(self.ring.root(e).text() for e in self.exps)
        return f"perm={self.cycle_text()} weights=[{weights}]"

    def __repr__(self) -> str:
        return f"Monomial({self.text()})"


class AffineMap:
    """g(v) = lin(v) + tran."""

    __slots__ = ("lin", "tran", "_hash")

    def __init__(self, lin: Monomial, tran: Vector):
        if tran.ring is not lin.ring:
            raise RingMismatch("linear and translation parts from different rings")
        if tran.n != lin.n:
            raise DimensionMismatch("linear and translation dimensions differ")
        self.lin = lin
        self.tran = tran
        self._hash = None

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "AffineMap":
        return cls(Monomial.identity(ring, n), Vector.zero(ring, n))

    @classmethod
    def translation(cls, tran: Vector) -> "AffineMap":
        return cls(Monomial.identity(tran.ring, tran.n), tran)

    @classmethod
    def linear(cls, lin: Monomial) -> "AffineMap":
        return cls(lin, Vector.zero(lin.ring, lin.n))

    @property
    def ring(self) -> Ring:
        return self.lin.ring

    @property
    def n(self) -> int:
        return self.lin.n

    def apply(self, v: Vector) -> Vector:
        return self.lin.apply(v) + self.tran

    def __call__(self, v: Vector) -> Vector:
        return self.apply(v)

    def is_identity(self) -> bool:
        return self.lin.is_identity() and self.tran.is_zero()

    def inverse(self) -> "AffineMap":
        inv = self.lin.inverse()
        return AffineMap(inv, -inv.apply(self.tran))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineMap):
            return NotImplemented
        return self.lin == other.lin and self.tran == other.tran

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.lin, self.tran))
        return self._hash

    def text(self) -> str:
        return f"{self.lin.text()} tran={self.tran.text()}"

    def __repr__(self) -> str:
        return f"AffineMap({self.text()})"


def compose(g: AffineMap, h: AffineMap) -> AffineMap:
    """The map v -> g(h(v)); Lin = Lin(g)Lin(h), Tran = Lin(g)Tran(h) + Tran(g)."""
    if g.n != h.n:
        raise DimensionMismatch(f"{g.n} vs {h.n}")
    return AffineMap(g.lin * h.lin, g.lin.apply(h.tran) + g.tran)


def power(g: AffineMap, k: int) -> AffineMap:
    """k-fold composition (negative k through the inverse)."""
    if k < 0:
        return power(g.inverse(), -k)
    out = AffineMap.identity(g.ring, g.n)
    base = g
    while k:
        if k & 1:
            out = compose(out, base)
        base = compose(base, base)
        k >>= 1
    return out


class AffineSubspace:
    """Affine subspace: base point plus independent directions, or EMPTY."""

    __slots__ = ("base", "directions")

    def __init__(self, base: Optional[Vector], directions: Sequence[Vector] = ()):
        self.base = base
        self.directions = tuple(directions)

    @property
    def is_empty(self) -> bool:
        return self.base is None

    @property
    def dim(self) -> int:
        if self.is_empty:
            raise EmptySubspace("empty subspace has no dimension")
        return len(self.directions)

    def point(self) -> Vector:
        if self.is_empty:
            raise EmptySubspace("empty subspace has no points")
        return self.base

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineSubspace):
            return NotImplemented
        return self.base == other.base and self.directions == other.directions

    def __repr__(self) -> str:
        if self.is_empty:
            return "AffineSubspace(EMPTY)"
        dirs = ", ".join(d.text() for d in self.directions)
        return f"AffineSubspace(base={self.base.text()}, directions=[{dirs}])"


EMPTY = AffineSubspace(None)


def _solve_scalar_system(rows: list[list[Scalar]], rhs: list[Scalar],
                         ring: Ring) -> Optional[tuple[list[Scalar], list[list[Scalar]]]]:
    """Solve A x = rhs over the scalar field.

    A has cyclotomic entries (pivots stay invertible); rhs may carry the
    formal parameter.  Returns (particular solution, kernel basis with leading
    coefficient one) or None when inconsistent.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    aug = [list(rows[i]) + [rhs[i]] for i in range(nrows)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        prow = next((i for i in range(r, nrows) if not aug[i][col].is_zero()), None)
        if prow is None:
            continue
        aug[r], aug[prow] = aug[prow], aug[r]
        inv = aug[r][col].inverse()
        aug[r] = [inv * x for x in aug[r]]
        for i in range(nrows):
            if i != r and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [aug[i][j] - f * aug[r][j] for j in range(ncols + 1)]
        pivots.append(col)
        r += 1
    for i in range(r, nrows):
        if not aug[i][ncols].is_zero():
            return None
    particular = [ring.zero()] * ncols
    for i, pc in enumerate(pivots):
        particular[pc] = aug[i][ncols]
    kernel: list[list[Scalar]] = []
    for fc in range(ncols):
        if fc in pivots:
            continue
        vec = [ring.zero()] * ncols
        vec[fc] = ring.one()
        for i, pc in enumerate(pivots):
            vec[pc] = -aug[i][fc]
        lead = next(x for x in vec if not x.is_zero())
        if not lead.is_one():
            inv = lead.inverse()
            vec = [inv * x for x in vec]
        kernel.append(vec)
    return particular, kernel


def fixed_space(g: AffineMap) -> AffineSubspace:
    """Solutions of (1 - Lin(g)) v = Tran(g), exactly."""
    ring = g.ring
    n = g.n
    rows = [[ring.zero()] * n for _ in range(n)]
    for j in range(n):
        rows[j][j] = rows[j][j] + ring.one()
        i = g.lin.perm[j]
        rows[i][j] = rows[i][j] - g.lin.weight(j)
    solved = _solve_scalar_system(rows, list(g.tran.coords), ring)
    if solved is None:
        return EMPTY
    particular, kernel = solved
    return AffineSubspace(Vector(ring, particular),
                          [Vector(ring, vec) for vec in kernel])


def scalar_matrix_rank(rows: list[list[Scalar]], ring: Ring) -> int:
    """Rank over the scalar field (entries must be cyclotomic)."""
    if not rows:
        return 0
    zeros = [ring.zero()] * len(rows)
    solved = _solve_scalar_system([list(r) for r in rows], zeros, ring)
    assert solved is not None
    return len(rows[0]) - len(solved[1])


def is_central_reflection(m: Monomial) -> bool:
    """True iff m is not the identity and rank(1 - m) == 1."""
    if m.is_identity():
        return False
    ring = m.ring
    n = m.n
    dense = m.dense()
    one = ring.one()
    zero = ring.zero()
    rows = [[(one if i == j else zero) - dense[i][j] for j in range(n)]
            for i in range(n)]
    return scalar_matrix_rank(rows, ring) == 1


def has_finite_order(g: AffineMap) -> bool:
    """Finite order iff the fixed space is nonempty (linear part has finite
    order automatically for monomial matrices with root-of-unity weights)."""
    return not fixed_space(g).is_empty


def is_reflection(g: AffineMap) -> bool:
    """Affine reflection test: a fixed point exists and the linear part is a
    central reflection."""
    return is_central_reflection(g.lin) and not fixed_space(g).is_empty


def subspace_satisfies_form(space: AffineSubspace, form, constant: Scalar) -> bool:
    """True iff the form is identically `constant` on the subspace: it takes
    the value at the base point and vanishes on every direction."""
    if space.is_empty:
        raise EmptySubspace("cannot evaluate a form on the empty subspace")
    if form.evaluate(space.base) != constant:
        return False
    return all(form.evaluate(d).is_zero() for d in space.directions)


def subspace_contains(space: AffineSubspace, u: Vector) -> bool:
    """Exact membership of a point in an affine subspace."""
    if space.is_empty:
        return False
    diff = u - space.base
    if not space.directions:
        return diff.is_zero()
    ring = u.ring
    cols = [list(d.coords) for d in space.directions]
    rows = [[cols[k][i] for k in range(len(cols))] for i in range(u.n)]
    return _solve_scalar_system(rows, list(diff.coords), ring) is not None
