from .skew_matrix import SkewMatrix, standard_theta
from .truncation_window import LatticeIndex, TruncationWindow, as_lattice_index, interior_indices
from .torus_element import TorusElement, make_unitary, identity, generator
from .star_product import star_product, involution, trace, gns_inner, delta
from .bigraded import (bigraded_star, bigraded_right_star, cocycle_gauge, gauge_partner,
                       gauge_intertwining_residual)
from .random_element import random_element
