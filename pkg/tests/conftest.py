"""Shared helpers: seeded random generators for scalars, monomials and maps."""

import random
from fractions import Fraction

import pytest

from crystref import AffineMap, Monomial, Ring, Scalar, Vector


def random_fraction(rng: random.Random, num: int = 3, dens=(1, 1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.choice(dens))


def random_scalar(rng: random.Random, ring: Ring, with_alpha: bool = False) -> Scalar:
    a = random_fraction(rng)
    b = random_fraction(rng) if ring.is_quadratic else 0
    if with_alpha and ring.alpha:
        c = random_fraction(rng)
        d = random_fraction(rng) if ring.is_quadratic else 0
        return ring.scalar(a, b, c, d)
    return ring.scalar(a, b)


def random_cyclo(rng: random.Random, ring: Ring) -> Scalar:
    return random_scalar(rng, ring, with_alpha=False)


def random_monomial(rng: random.Random, ring: Ring, n: int) -> Monomial:
    perm = list(range(n))
    rng.shuffle(perm)
    exps = [rng.randrange(ring.r) for _ in range(n)]
    return Monomial(ring, perm, exps)


def random_vector(rng: random.Random, ring: Ring, n: int,
                  with_alpha: bool = False) -> Vector:
    return Vector(ring, [random_scalar(rng, ring, with_alpha) for _ in range(n)])


def random_affine(rng: random.Random, ring: Ring, n: int,
                  with_alpha: bool = False) -> AffineMap:
    return AffineMap(random_monomial(rng, ring, n),
                     random_vector(rng, ring, n, with_alpha))


@pytest.fixture
def rng():
    return random.Random(20240229)
