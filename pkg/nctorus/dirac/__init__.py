from .gamma import GammaSet, gamma_set, spinor_dimension, SIGMA_1, SIGMA_2, SIGMA_3
from .truncated_operator import TruncatedOperator, represent
from .dirac_operator import (SpectrumReport, slash_operator, dirac_matrix, commutator, dirac_commutator,
                             derivation_commutator, spectrum_of, dirac_spectrum)
from .smooth_representation import pi_s, seminorm_s
