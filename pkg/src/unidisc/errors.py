"""Exception types shared across the package."""

from __future__ import annotations


class UnidiscError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(UnidiscError, ValueError):
    """An argument is structurally wrong (shape, range, missing field)."""


class InvalidState(UnidiscError, ValueError):
    """A state vector fails normalization or shape checks."""


class NotUnitary(UnidiscError):
    """A matrix expected to be unitary is not, within tolerance."""


class NotAProductState(UnidiscError):
    """A two-qubit state could not be factored into a tensor product."""


class InconsistentSpectrum(UnidiscError):
    """An eigenphase quadruple violates the zero-sum constraint."""


class DecompositionFailed(UnidiscError):
    """The canonical two-qubit decomposition did not converge or verify."""


class NonDiagonalProduct(UnidiscError):
    """U1†U2 is not diagonal in the Bell basis and strict mode forbids fallback."""


class TargetNotInHull(UnidiscError):
    """A requested witness target lies outside the hull, within tolerance."""


class IdenticalUnitaries(UnidiscError):
    """The two unitaries agree up to a global phase; discrimination is void."""


class RepetitionLimitExceeded(UnidiscError):
    """No repetition count up to the search cap achieves perfect discrimination."""


class DisagreementError(UnidiscError):
    """Two independent computations of the same quantity disagree."""


class SchemaError(UnidiscError):
    """A JSON document does not match the expected schema."""
