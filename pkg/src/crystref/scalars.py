"""Exact scalar arithmetic in Q(xi_r), optionally extended by a formal parameter.

xi_r is a primitive r-th root of unity for r in {1, 2, 3, 4, 6}; the quadratic
cases reduce xi^2 through the minimal relation of the ring, and r = 1, 2 fold
xi into the rational part.  The formal parameter ``al`` (rendered ``al`` in
text form) is transcendental: values are degree <= 1 polynomials in it, and no
operation in the library ever multiplies two scalars that both carry a formal
part.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import AlphaNotInvertible, AlphaSquared, DivisionByZero, RingMismatch

RationalLike = Union[int, Fraction]

# minimal relation xi^2 = u*xi + v for the genuinely quadratic rings
_REDUCTION = {3: (-1, -1), 4: (0, -1), 6: (1, -1)}
# for r = 1, 2 the root of unity is rational and is folded away
_FOLDED = {1: 1, 2: -1}

_RING_CACHE: dict[tuple[int, bool], "Ring"] = {}
_FRAC_ZERO = Fraction(0)


class Ring:
    """Ring tag: the order r of the root of unity and whether the formal
    parameter is in play.  Instances are interned, one per (r, alpha)."""

    __slots__ = ("r", "alpha", "_roots")

    def __new__(cls, r: int, alpha: bool = False) -> "Ring":
        key = (r, bool(alpha))
        ring = _RING_CACHE.get(key)
        if ring is None:
            if r not in (1, 2, 3, 4, 6):
                raise ValueError(f"unsupported root-of-unity order r={r}")
            ring = object.__new__(cls)
            ring.r = r
            ring.alpha = bool(alpha)
            ring._roots = None
            _RING_CACHE[key] = ring
        return ring

    def __repr__(self) -> str:
        return f"Ring(r={self.r}, alpha={self.alpha})"

    def __reduce__(self):
        return (Ring, (self.r, self.alpha))

    @property
    def is_quadratic(self) -> bool:
        return self.r in _REDUCTION

    @property
    def qdim(self) -> int:
        """Dimension of the scalar space over Q."""
        return (2 if self.is_quadratic else 1) * (2 if self.alpha else 1)

    @property
    def flat_width(self) -> int:
        """Length of coordinate vectors (uniform 2 without, 4 with parameter)."""
        return 4 if self.alpha else 2

    def scalar(self, a: RationalLike = 0, b: RationalLike = 0,
               c: RationalLike = 0, d: RationalLike = 0) -> "Scalar":
        return Scalar(self, a, b, c, d)

    def zero(self) -> "Scalar":
        return Scalar(self, 0)

    def one(self) -> "Scalar":
        return Scalar(self, 1)

    def rational(self, q: RationalLike) -> "Scalar":
        return Scalar(self, q)

    def xi(self) -> "Scalar":
        return Scalar(self, 0, 1)

    def formal(self) -> "Scalar":
        """The formal parameter as a scalar (requires an alpha ring)."""
        if not self.alpha:
            raise RingMismatch("ring carries no formal parameter")
        return Scalar(self, 0, 0, 1)

    def root(self, m: int) -> "Scalar":
        """xi^m reduced to a + b*xi form; m is taken mod r."""
        if self._roots is None:
            roots = [Scalar(self, 1)]
            xi = self.xi()
            for _ in range(self.r - 1):
                roots.append(roots[-1] * xi)
            self._roots = tuple(roots)
        return self._roots[m % self.r]

    def basis_scalars(self) -> tuple["Scalar", ...]:
        """A Q-basis of the scalar space (length qdim)."""
        basis = [self.one()]
        if self.is_quadratic:
            basis.append(self.xi())
        if self.alpha:
            basis.extend(s * self.formal() for s in list(basis))
        return tuple(basis)

    def from_coordinates(self, coords: Sequence[RationalLike]) -> "Scalar":
        """Inverse of Scalar.coordinates()."""
        if len(coords) != self.flat_width:
            raise RingMismatch(
                f"expected {self.flat_width} coordinates, got {len(coords)}")
        if self.alpha:
            return Scalar(self, coords[0], coords[1], coords[2], coords[3])
        return Scalar(self, coords[0], coords[1])


class Scalar:
    """Value a + b*xi + c*al + d*xi*al with exact rational coefficients.

    Immutable; all arithmetic returns new instances.  For r in {1, 2} the xi
    coefficients are folded into the rational part at construction, and rings
    without the formal parameter force c = d = 0.
    """

    __slots__ = ("ring", "a", "b", "c", "d", "_hash")

    def __init__(self, ring: Ring, a: RationalLike = 0, b: RationalLike = 0,
                 c: RationalLike = 0, d: RationalLike = 0) -> None:
        a = Fraction(a)
        b = Fraction(b)
        c = Fraction(c)
        d = Fraction(d)
        if not ring.is_quadratic:
            fold = _FOLDED[ring.r]
            a, b = a + fold * b, Fraction(0)
            c, d = c + fold * d, Fraction(0)
        if not ring.alpha and (c or d):
            raise RingMismatch("formal part in a ring without the parameter")
        self.ring = ring
        self.a = a
        self.b = b
        self.c = c
        self.d = d
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, a: Fraction, b: Fraction, c: Fraction,
             d: Fraction) -> "Scalar":
        """Construction fast path: fields must already be reduced Fractions
        respecting the ring's folding/parameter constraints."""
        s = object.__new__(cls)
        s.ring = ring
        s.a = a
        s.b = b
        s.c = c
        s.d = d
        s._hash = None
        return s

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_one(self) -> bool:
        return self.a == 1 and not (self.b or self.c or self.d)

    def is_cyclo(self) -> bool:
        """True when the formal part vanishes."""
        return not (self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise RingMismatch(f"{self} is not rational")
        return self.a

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.ring is not self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(self.ring, other)
        return NotImplemented

    def __add__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar._raw(self.ring, self.a + other.a, self.b + other.b,
                           self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(self.ring, -self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar._raw(self.ring, self.a - other.a, self.b - other.b,
                           self.c - other.c, self.d - other.d)

    def __rsub__(self, other) -> "Scalar":
        return -self + other

    def __mul__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not (self.is_cyclo() or other.is_cyclo()):
            raise AlphaSquared(f"({self}) * ({other}) would carry al^2")
        ring = self.ring
        if ring.is_quadratic:
            u, v = _REDUCTION[ring.r]
            a1, b1, a2, b2 = self.a, self.b, other.a, other.b
            # cyclotomic part times cyclotomic part
            aa = a1 * a2 + v * b1 * b2
            bb = a1 * b2 + b1 * a2 + u * b1 * b2
            # exactly one operand may carry a formal part
            if self.is_cyclo():
                c1, d1, c2, d2 = other.c, other.d, self.a, self.b
            else:
                c1, d1, c2, d2 = self.c, self.d, other.a, other.b
            cc = c1 * c2 + v * d1 * d2
            dd = c1 * d2 + d1 * c2 + u * d1 * d2
            return Scalar._raw(ring, aa, bb, cc, dd)
        # r in {1, 2}: everything rational in xi, only a and c survive
        zero = _FRAC_ZERO
        if self.is_cyclo():
            return Scalar._raw(ring, self.a * other.a, zero,
                               self.a * other.c, zero)
        return Scalar._raw(ring, self.a * other.a, zero,
                           self.c * other.a, zero)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Field inverse; defined for nonzero scalars without formal part."""
        if not self.is_cyclo():
            raise AlphaNotInvertible(f"cannot invert {self}")
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        ring = self.ring
        if not ring.is_quadratic:
            return Scalar(ring, 1 / self.a)
        u, v = _REDUCTION[ring.r]
        a, b = self.a, self.b
        # conjugate root xi' satisfies xi + xi' = u, xi * xi' = -v
        norm = a * a + a * b * u - b * b * v
        if norm == 0:
            raise DivisionByZero("inverse of zero")
        return Scalar(ring, (a + b * u) / norm, -b / norm)

    def __truediv__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return self.inverse() * other

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure -------------------------------------------------------

    def coordinates(self) -> tuple[Fraction, ...]:
        """Rational coordinates in the basis (1, xi) or (1, xi, al, xi*al)."""
        if self.ring.alpha:
            return (self.a, self.b, self.c, self.d)
        return (self.a, self.b)

    def cyclo_part(self) -> "Scalar":
        return Scalar(self.ring, self.a, self.b)

    def formal_part(self) -> "Scalar":
        """Coefficient of the formal parameter, as a cyclotomic scalar."""
        return Scalar(self.ring, self.c, self.d)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(self.ring, other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (self.ring is other.ring and self.a == other.a
                and self.b == other.b and self.c == other.c
                and self.d == other.d)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.r, self.ring.alpha,
                               self.a, self.b, self.c, self.d))
        return self._hash

    # -- text form -------------------------------------------------------

    def text(self) -> str:
        """Canonical report form "a + b*x + c*al + d*x*al" (zero terms omitted)."""
        terms = []
        for coeff, symbol in ((self.a, ""), (self.b, "x"),
                              (self.c, "al"), (self.d, "x*al")):
            if coeff == 0:
                continue
            mag = abs(coeff)
            if symbol and mag == 1:
                body = symbol
            elif symbol:
                body = f"{mag}*{symbol}"
            else:
                body = f"{mag}"
            terms.append(("-" if coeff < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = text

    def __repr__(self) -> str:
        return f"Scalar[r={self.ring.r}]({self.text()})"


def parse_scalar(ring: Ring, text: str) -> Scalar:
    """Parse the canonical text form back into a scalar."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar text")
    # split into signed terms
    terms: list[str] = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur and cur[-1] not in "+-/*":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    coeffs = {(False, False): Fraction(0), (True, False): Fraction(0),
              (False, True): Fraction(0), (True, True): Fraction(0)}
    for term in terms:
        sign = Fraction(1)
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        has_x = False
        has_al = False
        mag = Fraction(1)
        for factor in term.split("*"):
            if factor == "x":
                has_x = True
            elif factor == "al":
                has_al = True
            elif factor:
                mag *= Fraction(factor)
        coeffs[(has_x, has_al)] += sign * mag
    return Scalar(ring, coeffs[(False, False)], coeffs[(True, False)],
                  coeffs[(False, True)], coeffs[(True, True)])
