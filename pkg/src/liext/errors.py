"""Exception types shared across the package."""


class LiextError(Exception):
    """Base class for all errors raised by this package."""


class AmbientMismatch(LiextError):
    """Two subspaces live in ambients of different dimension."""


class NotASubspace(LiextError):
    """A claimed subspace relation (sub within total) does not hold."""


class DimensionMismatch(LiextError):
    """Vector or matrix dimensions are inconsistent with the operation."""


class Singular(LiextError):
    """A matrix that must be invertible is singular."""


class NotSolvable(LiextError):
    """Operation requires a solvable Lie algebra."""


class NotFiliform(LiextError):
    """Operation requires a filiform Lie algebra."""


class Unrecognized(LiextError):
    """The graded algebra matches neither known filiform pattern."""


class InternalCheckFailed(LiextError):
    """A self-check guarding a design assumption failed; never expected."""


class BadParams(LiextError):
    """Catalog family parameters are malformed."""


class JacobiFailure(LiextError):
    """A constructed bracket table violates the Jacobi identity."""


class NotACocycle(LiextError):
    """A bilinear form fails the (twisted) cocycle identity."""


class InvalidWeight(LiextError):
    """A weight action does not vanish on the nilradical or on [L, L]."""


class NotInvertible(LiextError):
    """Automorphism parameters violate an invertibility constraint."""


class NotAnAutomorphism(LiextError):
    """An assembled matrix does not preserve the structure constants."""


class NotNormalizable(LiextError):
    """No normalization case applies (annihilator meets the center)."""


class ParseError(LiextError):
    """An input file or parameter string is malformed."""
