"""Exception hierarchy.

Every error raised on bad input derives from ``SpinfactorError`` so the CLI
can map it to exit code 2 without swallowing genuine bugs.
"""


class SpinfactorError(ValueError):
    """Base class for input and domain errors."""


# root systems
class NotGCM(SpinfactorError):
    pass


class NotSymmetrizable(SpinfactorError):
    pass


class NotFiniteType(SpinfactorError):
    pass


class IndexOutOfRange(SpinfactorError):
    pass


class UnknownType(SpinfactorError):
    pass


class WeightLengthError(SpinfactorError):
    pass


# characters
class NotDominant(SpinfactorError):
    pass


class NotIntegral(SpinfactorError):
    pass


class RootSystemMismatch(SpinfactorError):
    pass


class NotACharacter(SpinfactorError):
    pass


# spin
class NotSelfDual(SpinfactorError):
    pass


class ZeroPairing(SpinfactorError):
    pass


class NonIntegralLambda(SpinfactorError):
    pass


class TooLarge(SpinfactorError):
    pass


# embeddings
class NonIntegralImage(SpinfactorError):
    pass


class BadRank(SpinfactorError):
    pass


class UnsupportedKind(SpinfactorError):
    pass


class DecompositionMismatch(SpinfactorError):
    pass


class BadPartition(SpinfactorError):
    pass


class ZeroPolynomial(SpinfactorError):
    pass


class LargeComputation(SpinfactorError):
    """A computation exceeds the default budget and needs ``allow_large``."""


# affine
class NotDominantAffine(SpinfactorError):
    pass


class LevelNotPositive(SpinfactorError):
    pass


class RankGate(SpinfactorError):
    pass


class NonIntegralNu(SpinfactorError):
    pass


class UnsupportedCase(SpinfactorError):
    pass


class SimplyLaced(SpinfactorError):
    pass
