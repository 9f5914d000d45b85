"""Exception hierarchy for exact-arithmetic and group-catalog failures."""


class CrystrefError(Exception):
    """Base class for all library errors."""


class RingMismatch(CrystrefError):
    """Operands belong to different scalar rings."""


class AlphaSquared(CrystrefError):
    """A product of two scalars with nonzero formal part was requested."""


class AlphaNotInvertible(CrystrefError):
    """Inversion of a scalar with nonzero formal part was requested."""


class DivisionByZero(CrystrefError):
    """Inversion or division by the zero scalar."""


class DimensionMismatch(CrystrefError):
    """Vectors, matrices or maps of incompatible dimensions."""


class RankDeficient(CrystrefError):
    """Lattice generators do not reach the declared rank."""


class ZeroDirection(CrystrefError):
    """Line intersection requested along the zero vector."""


class EmptySubspace(CrystrefError):
    """An operation required a nonempty affine subspace."""


class InvalidParameters(CrystrefError):
    """Parameters (r, p, n) do not define a group in scope."""


class TooLarge(CrystrefError):
    """Requested enumeration exceeds the configured cap."""


class UnknownGroup(CrystrefError):
    """Group identifier is not in the catalog."""


class ConstantNotAdmissible(CrystrefError):
    """Requested hyperplane constant lies outside the admissible module."""


class NotRankOne(CrystrefError):
    """Window/plot operations are defined for rank-1 groups only."""


class NotAMember(CrystrefError):
    """Element verification requested for a non-member of the group."""


class ExpectedPositiveGroup(CrystrefError):
    """Counterexample certification requested for a group expected to pass."""
