from typing import Tuple
import numpy as np
from nctorus.exceptions import InvalidParameterError
from .ladder import ladder_set
from .moyal_matrix import MoyalMatrix

NORMALIZED_THETA = 2.0


def moyal_partial(x: MoyalMatrix, axis: str, factor: int = 0) -> MoyalMatrix:
    """
    Derivations as commutators at θ = 2: ∂_p x = -i(q×x - x×q), ∂_q x = i(p×x - x×p).
    Other θ reduce to this case through the dilation E_a, which is not modeled here.

    :param x: MoyalMatrix with θ = 2.
    :param axis: 'p' or 'q'.
    :param factor: tensor factor carrying the coordinates.
    :return: MoyalMatrix with margin increased by one.
    """
    if x.theta != NORMALIZED_THETA:
        raise InvalidParameterError(f'Derivations are implemented for θ = 2, but was given: {x.theta}')
    if axis not in ('p', 'q'):
        raise InvalidParameterError(f'axis must be equal "p" or "q", not {axis}')
    if not 0 <= factor < x.N:
        raise InvalidParameterError(f'Factor index must be in 0..{x.N - 1}, but was given: {factor}')
    ladder = ladder_set(x.size)
    c = x.factors[factor]
    if axis == 'p':
        derived = -1j * (ladder.Q @ c - c @ ladder.Q)
    else:
        derived = 1j * (ladder.P @ c - c @ ladder.P)
    factors = list(x.factors)
    factors[factor] = derived
    return x.with_factors(factors, x.margin + 1)


def _factor_seminorm(c: np.ndarray, theta: float, k: int) -> float:
    half = np.arange(c.shape[0]) + 0.5
    weights = theta ** (2 * k) * np.outer(half ** k, half ** k)
    return float(np.sqrt(np.sum(weights * np.abs(c) ** 2)))


def seminorm_rk(x: MoyalMatrix, k: int) -> float:
    """
    r_k(c) = (Σ θ^{2k} (m+½)^k (n+½)^k |c_mn|²)^{1/2}; for N > 1 the product over the tensor factors.

    :param x: MoyalMatrix.
    :param k: level, k >= 0.
    :return: nonnegative float.
    """
    if k < 0:
        raise InvalidParameterError(f'Seminorm level must be >= 0, but was given: {k}')
    return float(np.prod([_factor_seminorm(c, x.theta, k) for c in x.factors]))


def norm_pair(x: MoyalMatrix) -> Tuple[float, float]:
    """
    (Frobenius, spectral) norms of the coefficient matrix; spectral <= Frobenius.
    """
    c = x.materialize()
    return float(np.linalg.norm(c, 'fro')), float(np.linalg.norm(c, 2))
