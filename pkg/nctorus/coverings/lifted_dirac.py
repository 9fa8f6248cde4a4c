import logging
import numpy as np
from nctorus.algebra import TorusElement, TruncationWindow
from nctorus.dirac import SpectrumReport, TruncatedOperator, commutator, dirac_matrix, gamma_set, represent, \
    slash_operator, spectrum_of
from nctorus.exceptions import DimensionMismatchError
from .covering_spec import CoveringSpec

logger = logging.getLogger(__name__)


def lifted_dirac_matrix(spec: CoveringSpec, window: TruncationWindow) -> TruncatedOperator:
    """
    Lift D̃ determined by the equivariant connection: block Σ_μ (l_μ / k_μ) γ^μ at cover lattice point l.

    :param spec: CoveringSpec.
    :param window: cover TruncationWindow.
    :return: Hermitian TruncatedOperator.
    """
    if window.n != spec.n:
        raise DimensionMismatchError(f'Window dimension {window.n} differs from covering dimension {spec.n}')
    logger.debug('building lifted Dirac matrix for k = %s, radius = %d', spec.k, window.radius)
    vectors = window.points().astype(float) / np.array(spec.k, dtype=float)
    return slash_operator(window, vectors, gamma_set(spec.n))


def lifted_commutator(a: TorusElement, spec: CoveringSpec, window: TruncationWindow) -> TruncatedOperator:
    """
    [D̃, π(a)] for an element over the cover Θ.
    """
    return commutator(lifted_dirac_matrix(spec, window), represent(a, window))


def lifted_dirac_spectrum(spec: CoveringSpec, window: TruncationWindow) -> SpectrumReport:
    return spectrum_of(lifted_dirac_matrix(spec, window), spec.cover_theta)


def lifted_restriction_residual(spec: CoveringSpec, base_radius: int) -> float:
    """
    D̃ restricted to the embedded modes Kq against D at q: max entrywise distance of the spinor blocks over the
    base window of the given radius.

    :param spec: CoveringSpec.
    :param base_radius: radius of the base window; the cover window has radius base_radius * max(k).
    :return: max entrywise residual.
    """
    base_window = TruncationWindow(n=spec.n, radius=base_radius)
    cover_window = TruncationWindow(n=spec.n, radius=base_radius * max(spec.k))
    lifted = lifted_dirac_matrix(spec, cover_window).matrix
    base = dirac_matrix(spec.base_theta, base_window).matrix
    m = gamma_set(spec.n).m
    residual = 0.0
    for position, q in enumerate(base_window.points()):
        cover_position = cover_window.index_of([k_j * q_j for k_j, q_j in zip(spec.k, q)])
        lifted_rows = slice(cover_position * m, (cover_position + 1) * m)
        base_rows = slice(position * m, (position + 1) * m)
        difference = lifted[lifted_rows, lifted_rows] - base[base_rows, base_rows]
        residual = max(residual, float(np.max(np.abs(difference))))
    return residual
