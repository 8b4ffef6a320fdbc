"""Exception hierarchy shared by all modules."""


class X3Error(Exception):
    """Base class for every error raised by this package."""


# finite fields
class NotPrime(X3Error, ValueError):
    pass


class DegreeTooLarge(X3Error, ValueError):
    pass


class NoEmbedding(X3Error, ValueError):
    pass


class ZeroElement(X3Error, ZeroDivisionError):
    pass


class ContextMismatch(X3Error, TypeError):
    pass


# power series
class NonUnitDivisor(X3Error, ZeroDivisionError):
    pass


class SingularStart(X3Error, ValueError):
    pass


class NoConvergence(X3Error, ArithmeticError):
    pass


class NotReversible(X3Error, ValueError):
    pass


# numerical semigroups
class InfiniteGaps(X3Error, ValueError):
    pass


class NotASemigroup(X3Error, ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotTelescopic(X3Error, ValueError):
    pass


# curve
class BadCongruence(X3Error, ValueError):
    pass


class NotPrimePower(X3Error, ValueError):
    pass


class TooSmall(X3Error, ValueError):
    pass


class NotOnCurve(X3Error, ValueError):
    pass


class AlphaUndefined(X3Error, ValueError):
    pass


class PoleAt(X3Error, ZeroDivisionError):
    pass


class ExcludedAlpha(X3Error, ValueError):
    pass


class InternalInconsistency(X3Error, AssertionError):
    pass


class WrongClass(X3Error, ValueError):
    pass


class RecursionPole(X3Error, ZeroDivisionError):
    pass


class UnsupportedPlace(X3Error, ValueError):
    pass


class UnsupportedFunction(X3Error, ValueError):
    pass


class ClassInfeasible(X3Error, ValueError):
    pass


class ExtensionBoundTooSmall(X3Error, ValueError):
    pass


# oracle / weierstrass
class DimensionMismatch(X3Error, AssertionError):
    pass


class PrecisionExhausted(X3Error, ArithmeticError):
    pass


class UnclassifiedPoint(X3Error, ValueError):
    pass


class UndefinedAt(X3Error, ValueError):
    pass


class BadPOrder(X3Error, ValueError):
    pass
