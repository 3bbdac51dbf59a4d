"""
==========
EXCEPTIONS
==========

All errors raised by `spdmidrange` derive from `SpdError` and fall into two families:

- `SpdValidationError` (also a `ValueError`): the inputs violate a precondition;
- `SpdNumericalError` (also an `ArithmeticError`): a computation failed on valid inputs.

The command-line harness maps the first family to exit code 2 and the second to exit code 3.
"""


class SpdError(Exception):
    """Base class of all `spdmidrange` errors."""


class SpdValidationError(SpdError, ValueError):
    """Inputs violate a precondition."""


class SpdNumericalError(SpdError, ArithmeticError):
    """Numerical failure on otherwise valid inputs."""


# validation
# ==========

class NotSquare(SpdValidationError):
    pass


class AsymmetryExceedsTolerance(SpdValidationError):
    pass


class NotPositiveDefinite(SpdValidationError):
    pass


class DimensionMismatch(SpdValidationError):
    pass


class WrongDimension(SpdValidationError):
    pass


class InvalidGeodesicWeight(SpdValidationError):
    pass


class SingularTransform(SpdValidationError):
    pass


class EmptyInput(SpdValidationError):
    pass


class EmptyDataset(SpdValidationError):
    pass


class EmptyCluster(SpdValidationError):
    pass


class KTooLarge(SpdValidationError):
    pass


class MissingTruth(SpdValidationError):
    pass


class LengthMismatch(SpdValidationError):
    pass


# numerical
# =========

class NoConvergence(SpdNumericalError):
    pass


class DegenerateDirection(SpdNumericalError):
    pass


class CenterSamplingExhausted(SpdNumericalError):
    """Rejection sampling of well-separated cluster centers hit its attempt cap."""

    def __init__(self, message: str, achieved_separation: float):
        super().__init__(message)
        self.achieved_separation: float = achieved_separation
