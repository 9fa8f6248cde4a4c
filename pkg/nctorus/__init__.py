# version
__version__ = '0.1.0'

from .global_settings import settings
from .exceptions import (NcTorusError, DimensionMismatchError, ThetaMismatchError, InvalidParameterError,
                         SizeCapError, ParseError, ConsistencyError)
from .algebra import SkewMatrix, TorusElement, TruncationWindow, make_unitary, star_product
from .dirac import dirac_matrix, dirac_spectrum, gamma_set
from .coverings import CoveringSpec, make_covering, tower_build
from .moyal import MoyalMatrix, moyal_product
from .verify_all import verify_all
