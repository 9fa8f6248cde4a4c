from .moyal_matrix import MoyalMatrix, moyal_product, tensor_combine, random_moyal
from .ladder import LadderSet, ladder_set, ladder_act
from .calculus import moyal_partial, seminorm_rk, norm_pair, NORMALIZED_THETA
