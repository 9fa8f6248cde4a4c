class NcTorusError(Exception):
    """
    Base class of every error raised by the package.
    """


class DimensionMismatchError(NcTorusError, ValueError):
    """Lattice indices, axes or residue vectors of the wrong length."""


class ThetaMismatchError(NcTorusError, ValueError):
    """Operands that live over different deformation parameters."""


class InvalidParameterError(NcTorusError, ValueError):
    """A parameter outside its admissible range."""


class SizeCapError(NcTorusError):
    """A deck group or a truncated operator above its configured cap."""


class ParseError(NcTorusError):
    """Malformed JSON input or a missing field."""


class ConsistencyError(NcTorusError):
    """An internal-consistency check failed."""
