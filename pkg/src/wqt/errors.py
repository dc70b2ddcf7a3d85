"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class WqtError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(WqtError, ValueError):
    """An invalid Lie type, rank, node or engine setting."""


class ParseError(WqtError, ValueError):
    """Malformed monomial text or malformed serialized input."""


class PreconditionError(WqtError, ValueError):
    """An operation was called on data that violates its stated requirements."""


class ResonanceError(PreconditionError):
    """A coefficient factor of the form (1 - q^0 t^0) would vanish identically."""


class EvaluationError(WqtError, ArithmeticError):
    """A coefficient has a zero or a pole at the requested evaluation point."""


class LimitError(WqtError, ArithmeticError):
    """The t -> 1 limit of a coefficient is singular, zero, or depends on q.

    When the limit exists but depends on q, ``residual`` holds the
    q-only coefficient that was left over.
    """

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class UnsupportedError(WqtError, NotImplementedError):
    """The requested (type, node) pair has no closed-form catalog."""


class InternalConsistencyError(WqtError, RuntimeError):
    """A property that holds for every correct expansion was violated."""
