"""Exception types shared across the package."""


class QOrderError(Exception):
    """Base class for every error raised by qorder."""


class CycleError(QOrderError):
    """The given strict relations close into a cycle."""


class DuplicateError(QOrderError):
    """An element index appears twice where distinct indices are required."""


class EmptyOrderError(QOrderError):
    """An operation needs at least one element."""


class AlphabetError(QOrderError):
    """A digit is outside the alphabet of its rank."""


class DuplicateWordError(QOrderError):
    """Two elements of a representation share a word."""


class LengthError(QOrderError):
    """A word is shorter than the representation's minimum length."""


class ValidationError(QOrderError):
    """A representation or decomposition does not describe its host."""


class NotTrunkError(QOrderError):
    pass


class NotItovError(QOrderError):
    pass


class NotTotalError(QOrderError):
    pass


class NotCedarError(QOrderError):
    pass


class NotUpRegularError(QOrderError):
    pass


class NotSeriesParallelError(QOrderError):
    """Raised with an OBS2 witness (a, b, c, d) with a<b, c<d, c<b."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeError(QOrderError):
    """Input exceeds the cap of an exhaustive routine."""


class ParamError(QOrderError):
    pass


class LabelError(QOrderError):
    pass


class CoverageError(QOrderError):
    pass


class InvalidDecompositionError(QOrderError):
    pass


class NotCompactError(QOrderError):
    pass


class ParseError(QOrderError):
    """Malformed input file."""
