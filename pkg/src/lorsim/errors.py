"""Exception types shared across the package."""


class LorsimError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(LorsimError, ValueError):
    pass


class NotSkewError(LorsimError, ValueError):
    """A rotation-part matrix fails A + A^T = 0."""


class NotIsotropicError(LorsimError, ValueError):
    """A vector required to lie on the light cone does not."""


class ChartDomainError(LorsimError, ValueError):
    """The isotropic line through p has no chart coordinate."""


class EmptyAlgebraError(LorsimError, ValueError):
    """An operation needs at least one generator."""


class NotWeaklyIrreducibleError(LorsimError, ValueError):
    """The algebra fails the structural checks of every transitive type."""


class NotInNormalPositionError(LorsimError, ValueError):
    """Matrices do not preserve the distinguished isotropic line."""


class NotClosedError(LorsimError, ValueError):
    """A set of matrices or triples is not closed under the Lie bracket."""


class TransportError(LorsimError, RuntimeError):
    """A transport element could not be realized in the requested group."""
