"""Exception hierarchy shared across the package."""


class RatpowError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RatpowError):
    """Malformed ideal, family, or index input."""


class DimensionMismatch(RatpowError):
    """Operands live in polynomial rings with different variable counts."""


class DegenerateIdeal(RatpowError):
    """Zero or unit ideal passed to an operation that needs a proper nonzero one."""


class DeskScaleExceeded(RatpowError):
    """Instance is larger than the enforced desk-scale limits."""


class UnboundedRegion(RatpowError):
    """A lattice-point count hit the search-box boundary: the region is not finite."""


class ScanInstability(RatpowError):
    """Enlarging a scan box changed a result that should be box-independent."""
