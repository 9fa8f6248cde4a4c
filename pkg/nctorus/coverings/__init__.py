from .covering_spec import (CoveringSpec, DeckElement, make_covering, deck_group, deck_compose, deck_inverse,
                            COMPATIBILITY_TOLERANCE)
from .deck_action import deck_action, invariant_projection, deck_action_is_free, character_phase, on_k_lattice
from .module_structure import (embed, descend, module_inner, induced_inner, generator_box, module_decompose,
                               module_recompose)
from .lifted_dirac import lifted_dirac_matrix, lifted_commutator, lifted_dirac_spectrum, lifted_restriction_residual
from .connection import (ConnectionValue, connection_apply, averaged_connection, equivariance_check,
                         connection_leibniz_residual, lifted_connection_residual)
from .tower import (TowerReport, tower_build, tower_moduli, one_shot_covering, compose_embeddings, reduce_deck,
                    tower_report)
