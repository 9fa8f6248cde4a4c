import warnings
import numpy as np
from nctorus.algebra import TorusElement, TruncationWindow
from nctorus.exceptions import InvalidParameterError
from .dirac_operator import dirac_matrix
from .truncated_operator import TruncatedOperator, represent


def pi_s(a: TorusElement, s: int, window: TruncationWindow) -> TruncatedOperator:
    """
    Smooth representations: π^0 = π and
    π^{s+1}(a) = [[π^s(a), 0], [[D, π^s(a)], π^s(a)]] with D acting diagonally on the 2^s copies.
    For s >= 1 the recursion starts from π(a) tensored with the spinors.

    :param a: TorusElement.
    :param s: level, s >= 0.
    :param window: TruncationWindow.
    :return: TruncatedOperator with 2^s copies.
    """
    if s < 0:
        raise InvalidParameterError(f'Level s must be >= 0, but was given: {s}')
    base = represent(a, window)
    if s == 0:
        return base
    dirac = dirac_matrix(a.theta, window)
    current = base.with_spinors(dirac.spinor_dim).matrix
    for level in range(s):
        copies = 2 ** level
        diagonal_d = np.kron(np.eye(copies, dtype=complex), dirac.matrix)
        lower_left = diagonal_d @ current - current @ diagonal_d
        current = np.block([[current, np.zeros_like(current)], [lower_left, current]])
    return TruncatedOperator(window=window, spinor_dim=dirac.spinor_dim, copies=2 ** s, matrix=current)


def seminorm_s(a: TorusElement, s: int, window: TruncationWindow, interior_radius: int = None) -> float:
    """
    ‖a‖_s = ‖π^s(a)‖, the spectral norm. With interior_radius the norm is taken over the interior columns
    only, which removes the boundary loss of truncation.

    :param a: TorusElement.
    :param s: level, s >= 0.
    :param window: TruncationWindow.
    :param interior_radius: optional support radius defining the interior block.
    :return: nonnegative float.
    """
    operator = pi_s(a, s, window)
    if interior_radius is None:
        return operator.spectral_norm()
    block = operator.interior_block(interior_radius)
    if block.size == 0:
        warnings.warn('Interior block is empty, seminorm reported as 0', UserWarning)
        return 0.0
    return float(np.linalg.norm(block, 2))
