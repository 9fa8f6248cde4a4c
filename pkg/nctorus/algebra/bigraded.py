import cmath
from typing import Tuple
import numpy as np
from nctorus.exceptions import DimensionMismatchError, InvalidParameterError, ThetaMismatchError
from .skew_matrix import SkewMatrix
from .star_product import _accumulate, star_product
from .torus_element import TorusElement, make_unitary


def check_bigraded(x: TorusElement) -> None:
    if x.n != 2:
        raise DimensionMismatchError(f'Bigraded product is defined on the 2-torus, but was given n = {x.n}')
    if not x.theta.is_zero:
        raise ThetaMismatchError(f'Bigraded operands must carry Θ = 0, but was given: {x.theta.entries}')


def _lambda_angle(lam: complex) -> float:
    if abs(abs(lam) - 1.0) > 1e-12:
        raise InvalidParameterError(f'λ must have modulus 1, but |λ| = {abs(lam)}')
    return cmath.phase(lam)


def _twisted(x: TorusElement, y: TorusElement, lam: complex, right: bool) -> TorusElement:
    check_bigraded(x)
    check_bigraded(y)
    angle = _lambda_angle(lam)
    if x.is_zero or y.is_zero:
        return TorusElement(theta=x.theta, coeffs={})
    k_keys, k_values = x.arrays()
    p_keys, p_values = y.arrays()
    if right:
        exponent = np.outer(k_keys[:, 0], p_keys[:, 1])
    else:
        exponent = np.outer(k_keys[:, 1], p_keys[:, 0])
    pair_values = (k_values[:, None] * p_values[None, :]) * np.exp(1j * angle * exponent)
    targets = (k_keys[:, None, :] + p_keys[None, :, :]).reshape(-1, 2)
    return _accumulate(x.theta, targets, pair_values.reshape(-1))


def bigraded_star(x: TorusElement, y: TorusElement, lam: complex) -> TorusElement:
    """
    Deformed product x * y = λ^{n'_1 n_2} xy of homogeneous elements, extended bilinearly. The bidegree of
    the coefficient at k is k itself, so the pair (k, p) contributes x̂(k)ŷ(p)λ^{p_1 k_2} at k + p.

    :param x: element of the commutative 2-torus.
    :param y: element of the commutative 2-torus.
    :param lam: deformation parameter of modulus 1.
    :return: TorusElement.
    """
    return _twisted(x, y, lam, right=False)


def bigraded_right_star(x: TorusElement, y: TorusElement, lam: complex) -> TorusElement:
    """
    Deformed right product x *_r y = λ^{n_1 n'_2} xy, the pair (k, p) carries λ^{k_1 p_2}.
    """
    return _twisted(x, y, lam, right=True)


def cocycle_gauge(a: TorusElement, theta: float) -> TorusElement:
    """
    Multiply the coefficient at k by exp(-iπθ k_1 k_2). The result lives on the commutative 2-torus.

    :param a: element of a 2-torus.
    :param theta: deformation angle.
    :return: TorusElement with Θ = 0.
    """
    if a.n != 2:
        raise DimensionMismatchError(f'Gauge is defined on the 2-torus, but was given n = {a.n}')
    return TorusElement(theta=SkewMatrix.zero(2),
                        coeffs={k: cmath.exp(-1j * cmath.pi * theta * k[0] * k[1]) * v for k, v in a.coeffs.items()})


def gauge_partner(theta: float) -> Tuple[SkewMatrix, complex]:
    """
    Deformation and bigraded parameter intertwined by cocycle_gauge(., theta):
    gauge(x ⋆_Θ y) = gauge(x) * gauge(y) with θ_12 = -theta and λ = exp(-2πi theta).

    :param theta: gauge angle.
    :return: (Θ, λ).
    """
    return SkewMatrix.from_upper(2, {(0, 1): -theta}), cmath.exp(-2j * cmath.pi * theta)


def gauge_intertwining_residual(theta: float, radius: int) -> float:
    """
    Brute force over all basis pairs |k|, |p| <= radius of |gauge(U_k ⋆ U_p) - gauge(U_k) * gauge(U_p)|.
    """
    skew, lam = gauge_partner(theta)
    axis = range(-radius, radius + 1)
    points = [(k1, k2) for k1 in axis for k2 in axis]
    residual = 0.0
    for k in points:
        u_k = make_unitary(k, skew)
        gauged_k = cocycle_gauge(u_k, theta)
        for p in points:
            u_p = make_unitary(p, skew)
            left = cocycle_gauge(star_product(u_k, u_p), theta)
            right = bigraded_star(gauged_k, cocycle_gauge(u_p, theta), lam)
            residual = max(residual, left.max_distance(right))
    return residual
