"""Exception hierarchy shared by all selim modules."""


class SelimError(Exception):
    """Base class for every error raised by selim."""


class DimensionError(SelimError, ValueError):
    """Shapes or lengths of the inputs do not fit together."""


class DomainError(SelimError, ValueError):
    """An input lies outside the domain of the operation."""


class ResourceLimitError(SelimError):
    """The requested computation exceeds a configured size limit."""


class NotInvertibleError(SelimError, ArithmeticError):
    """A series or scalar has no inverse (zero constant term)."""


class DegenerateSpecializationError(SelimError, ArithmeticError):
    """The rational resultant formula has a vanishing denominator for these coefficients."""


class DegenerateSystemError(SelimError, ArithmeticError):
    """A polynomial system has a positive-dimensional (or otherwise degenerate) solution set."""


class SupportTooSmallError(SelimError):
    """The interpolation support does not contain the implicit support."""


class InconclusiveError(SelimError):
    """An oracle cannot decide this instance (e.g. a root at infinity); resample."""
