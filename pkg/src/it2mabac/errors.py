"""Exception hierarchy shared by all modules.

Two broad groups exist so callers (notably the CLI) can distinguish bad
input from failures that occur while computing on accepted input.
"""


class MabacError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(MabacError):
    """Input data, a scale, or a configuration value is malformed."""


class ComputationError(MabacError):
    """A pipeline stage cannot produce a result from the given data."""


class EndpointOrderViolation(ValidationError):
    """Trapezoid endpoints are not in non-decreasing order."""


class HeightOutOfRange(ValidationError):
    """A trapezoid height lies outside (0, 1]."""


class HeightOrderViolation(ValidationError):
    """The lower membership height exceeds the upper one."""


class UnknownTerm(ValidationError):
    """A linguistic term is not defined by the scale in use."""


class DimensionMismatch(ValidationError):
    """Vectors or matrices do not agree on their expected shape."""


class InvalidParams(ValidationError):
    """A tuning parameter is outside its admissible range."""


class ProblemSyntaxError(ValidationError):
    """A problem or scale document cannot be parsed."""


class NegativeScalar(ComputationError):
    """Scalar multiplication was requested with a negative factor."""


class NegativeOperand(ComputationError):
    """An operation defined on the non-negative cone met a negative value."""


class TooFewValues(ComputationError):
    """An aggregation operator needs more inputs than were supplied."""


class EmptyInput(ComputationError):
    """An operator received no values at all."""


class ZeroHeight(ComputationError):
    """A rank computation met a membership function of zero height."""


class DegenerateRange(ComputationError):
    """All values of a criterion column coincide, so it cannot be scaled."""
