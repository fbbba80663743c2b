"""Exception types raised by catdeg.

Every validation failure raises a named subclass of CatdegError so callers
(and the CLI, which maps them to exit code 2) can distinguish causes without
parsing messages.
"""


class CatdegError(ValueError):
    """Base class for all catdeg validation errors."""


# --- numerical monoid construction ---

class EmptyGenerators(CatdegError):
    pass


class InvalidGenerator(CatdegError):
    """A generator is not a positive integer."""


class DuplicateGenerator(CatdegError):
    pass


class NotCoprime(CatdegError):
    """gcd of the generators exceeds 1, so the complement in N is infinite."""


class NotMinimal(CatdegError):
    """Some generator is a nonnegative combination of the others."""

    def __init__(self, message: str, generator: int, witness: tuple[int, ...]):
        super().__init__(message)
        self.generator = generator
        self.witness = witness


# --- membership / divisibility ---

class NotCoprimePair(CatdegError):
    pass


class NotAnElement(CatdegError):
    pass


# --- factorizations ---

class NegativeElement(CatdegError):
    pass


class EmptySet(CatdegError):
    """An operation that needs a nonempty factorization set got an empty one."""


class DimensionMismatch(CatdegError):
    pass


class FactorizationNotInSet(CatdegError):
    pass


# --- catenary / Betti ---

class NotEmbeddingDimension3(CatdegError):
    pass


class UniqueFactorization(CatdegError):
    """The element factors uniquely, so the requested bound is vacuous."""


# --- families ---

class BadParameters(CatdegError):
    pass


class NotDistinctPrimes(CatdegError):
    pass


class TooFew(CatdegError):
    pass


# --- block monoids ---

class OrderTooSmall(CatdegError):
    pass


class OrderTooLarge(CatdegError):
    pass


class GroupMismatch(CatdegError):
    pass


class NotZeroSum(CatdegError):
    pass
