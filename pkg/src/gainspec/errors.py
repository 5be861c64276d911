"""Exception hierarchy.

CLI exit codes are attached to the base classes so the command layer can map
any raised error to a status without a lookup table.
"""


class GainSpecError(Exception):
    exit_code = 1


class InputError(GainSpecError, ValueError):
    """Malformed input: bad graph data, bad parameters, parse failures."""

    exit_code = 2


class ParseError(InputError):
    pass


class InvalidGraphError(InputError):
    pass


class DimensionError(InputError):
    pass


class InvalidParameterError(InputError):
    pass


class InvalidCycleError(InputError):
    pass


class NotHermitianError(InputError):
    pass


class HypothesisError(GainSpecError):
    """A bound hypothesis does not hold for the given graph."""

    exit_code = 3


class EmptyGraphError(HypothesisError):
    pass


class DisconnectedGraphError(HypothesisError):
    pass


class NoTriangleError(HypothesisError):
    pass


class NoPathTripleError(HypothesisError):
    pass


class BipartitionError(HypothesisError):
    pass


class SingularMatrixError(HypothesisError):
    pass


class RecurrenceBreakdownError(HypothesisError):
    pass


class SizeCapError(GainSpecError):
    exit_code = 4


class SoundnessError(GainSpecError):
    """A computed bound contradicts the reference eigenvalue beyond slack."""

    exit_code = 1
