"""Exception types shared across the package.

Plain ValueError / ZeroDivisionError are used for generic bad input and
division by zero; the classes here name the domain-specific failure modes
so callers (and the CLI) can react to them individually.
"""


class NotCoprimeError(ValueError):
    """Raised when the code length is divisible by the field characteristic."""


class NotAUnitError(ZeroDivisionError):
    """Raised when inverting a non-unit of a chain ring."""


class AmbientMismatchError(ValueError):
    """Raised when elements of different quotient rings are mixed.

    Elements of R[x]/(x^n - lam) and R[x]/(x^n - lam') are incomparable
    unless lam == lam'; silently coercing them is the classic duality bug,
    so every cross-ambient operation is a hard error.
    """


class InvalidIndexError(ValueError):
    """Raised for a code index tuple of the wrong length or range."""


class SelfDualUnsupportedError(ValueError):
    """Raised when self-dual enumeration is requested outside q = 2^m, delta = 1."""


class InternalError(RuntimeError):
    """An arithmetic identity that must hold mathematically failed to hold."""
