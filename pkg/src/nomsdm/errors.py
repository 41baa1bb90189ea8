"""Exception and warning types shared across the package."""


class NomsdmError(Exception):
    """Base class for all package errors."""


class InvalidCode(NomsdmError, ValueError):
    """A sparse code violates its construction invariants."""


class InvalidInput(NomsdmError, ValueError):
    """An argument is outside an operation's domain."""


class ShapeError(NomsdmError, ValueError):
    """Dimensions of codes, matrices or configs do not line up."""


class NumericError(NomsdmError, ArithmeticError):
    """Non-finite values entered a numeric computation."""


class CalibrationError(NomsdmError, RuntimeError):
    """A target firing rate cannot be reached for the given neuron model."""


class FormatError(NomsdmError, ValueError):
    """A binary file does not match its expected on-disk format."""


class UnderfiredWarning(RuntimeWarning):
    """Fewer neurons fired within the window than the decode needed.

    The decode pads the winner set deterministically; callers that care
    (the benchmark does) should track occurrences via the memory counters.
    """
