import logging
import numpy as np
from nctorus.exceptions import DimensionMismatchError
from .torus_element import TorusElement

logger = logging.getLogger(__name__)


def _accumulate(theta, targets: np.ndarray, values: np.ndarray) -> TorusElement:
    """
    Sum values that land on the same lattice point. np.unique over rows returns the points in lexicographic order.
    """
    if targets.shape[0] == 0:
        return TorusElement(theta=theta, coeffs={})
    keys, inverse = np.unique(targets, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    summed = (np.bincount(inverse, weights=values.real, minlength=keys.shape[0])
              + 1j * np.bincount(inverse, weights=values.imag, minlength=keys.shape[0]))
    return TorusElement.from_arrays(theta, keys, summed)


def star_product(a: TorusElement, b: TorusElement) -> TorusElement:
    """
    Twisted convolution (a ⋆ b)(p) = Σ_{r+s=p} â(r) b̂(s) exp(-πi r·Θs).

    All support pairs are formed at once: the phase matrix is exp(-πi R Θ S^T) for the support arrays R, S.

    :param a: left factor.
    :param b: right factor over the same Θ.
    :return: TorusElement.
    """
    a.check_same_theta(b)
    if a.is_zero or b.is_zero:
        return TorusElement(theta=a.theta, coeffs={})
    r_keys, r_values = a.arrays()
    s_keys, s_values = b.arrays()
    quad = (r_keys @ a.theta.array) @ s_keys.T
    pair_values = (r_values[:, None] * s_values[None, :]) * np.exp(-1j * np.pi * quad)
    targets = (r_keys[:, None, :] + s_keys[None, :, :]).reshape(-1, a.n)
    logger.debug('star product over %d support pairs', pair_values.size)
    return _accumulate(a.theta, targets, pair_values.reshape(-1))


def involution(a: TorusElement) -> TorusElement:
    """
    a*(p) = conj(â(-p)).
    """
    return TorusElement(theta=a.theta, coeffs={tuple(-v for v in k): value.conjugate()
                                               for k, value in a.coeffs.items()})


def trace(a: TorusElement) -> complex:
    """
    Tracial state τ(a) = â(0).
    """
    return a.coefficient((0,) * a.n)


def gns_inner(a: TorusElement, b: TorusElement) -> complex:
    """
    GNS inner product τ(a* ⋆ b).
    """
    a.check_same_theta(b)
    return trace(star_product(involution(a), b))


def delta(a: TorusElement, mu: int) -> TorusElement:
    """
    Derivation δ_μ(U_k) = k_μ U_k, mu is 1-based.

    :param a: TorusElement.
    :param mu: axis in 1..n.
    :return: TorusElement.
    """
    if not 1 <= mu <= a.n:
        raise DimensionMismatchError(f'Axis must be in 1..{a.n}, but was given: {mu}')
    return a.map_coefficients(lambda k, value: k[mu - 1] * value)
