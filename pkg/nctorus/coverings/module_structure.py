import cmath
from itertools import product
from typing import Dict, Tuple
import numpy as np
from nctorus.algebra import TorusElement, involution, star_product, trace
from nctorus.exceptions import ConsistencyError, ThetaMismatchError
from .covering_spec import CoveringSpec, deck_group
from .deck_action import deck_action, on_k_lattice

LATTICE_RESIDUE_TOLERANCE = 1e-13


def embed(a: TorusElement, spec: CoveringSpec) -> TorusElement:
    """
    *-homomorphism u_j -> v_j^{k_j}: the coefficient at l moves to (k_1 l_1, ..., k_n l_n).

    :param a: element over the base Θ.
    :param spec: CoveringSpec.
    :return: TorusElement over the cover Θ.
    """
    if a.theta != spec.base_theta:
        raise ThetaMismatchError(f'Element lives over {a.theta.entries}, the covering base is '
                                 f'{spec.base_theta.entries}')
    return TorusElement(theta=spec.cover_theta,
                        coeffs={tuple(k_j * l_j for k_j, l_j in zip(spec.k, l)): v for l, v in a.coeffs.items()})


def descend(a: TorusElement, spec: CoveringSpec) -> TorusElement:
    """
    Inverse of embed on elements supported on the lattice k_1 Z x ... x k_n Z.
    """
    if a.theta != spec.cover_theta:
        raise ThetaMismatchError(f'Element lives over {a.theta.entries}, the covering cover is '
                                 f'{spec.cover_theta.entries}')
    off_lattice = [l for l in a.coeffs if not on_k_lattice(l, spec.k)]
    if off_lattice:
        raise ConsistencyError(f'Element is not invariant, coefficients off the k-lattice at {off_lattice[:5]}')
    return TorusElement(theta=spec.base_theta,
                        coeffs={tuple(l_j // k_j for l_j, k_j in zip(l, spec.k)): v for l, v in a.coeffs.items()})


def module_inner(a: TorusElement, b: TorusElement, spec: CoveringSpec) -> TorusElement:
    """
    Hilbert-module inner product ⟨a, b⟩ = Σ_{g∈G} g(a* ⋆ b), returned as an element of the base torus.
    Off-lattice remainders of the group sum must stay below 1e-13 relative to the largest coefficient.

    :param a: element over the cover Θ.
    :param b: element over the cover Θ.
    :param spec: CoveringSpec.
    :return: TorusElement over the base Θ.
    """
    a.check_same_theta(b)
    product_ab = star_product(involution(a), b)
    total: Dict[Tuple[int, ...], complex] = {}
    for g in deck_group(spec):
        for l, v in deck_action(g, product_ab, spec).coeffs.items():
            total[l] = total.get(l, 0j) + v
    scale = max((abs(v) for v in product_ab.coeffs.values()), default=0.0)
    residue = max((abs(v) for l, v in total.items() if not on_k_lattice(l, spec.k)), default=0.0)
    if residue > LATTICE_RESIDUE_TOLERANCE * max(1.0, scale * spec.group_order):
        raise ConsistencyError(f'Group sum leaves off-lattice residue {residue} above '
                               f'{LATTICE_RESIDUE_TOLERANCE}')
    invariant = TorusElement(theta=spec.cover_theta,
                             coeffs={l: v for l, v in total.items() if on_k_lattice(l, spec.k)})
    return descend(invariant, spec)


def induced_inner(a: TorusElement, b: TorusElement, spec: CoveringSpec) -> complex:
    """
    Scalar product of the induced Hilbert space, τ(⟨a, b⟩); the basis ξ̃_l is orthogonal with norm² |G|.
    """
    return trace(module_inner(a, b, spec))


def generator_box(spec: CoveringSpec):
    """
    Residues j with 0 <= j_μ < k_μ, the generators Ũ_j of the cover as a module over the base.
    """
    return [tuple(j) for j in product(*(range(m) for m in spec.k))]


def module_decompose(a: TorusElement, spec: CoveringSpec) -> Dict[Tuple[int, ...], TorusElement]:
    """
    Components x_j over the base with a = Σ_j Ũ_j ⋆ embed(x_j). Since Ũ_j ⋆ Ũ_{Kq} = exp(-πi j·Θ̃Kq) Ũ_{j+Kq},
    x_j(q) = â(j + Kq) exp(πi j·Θ̃Kq).

    :param a: element over the cover Θ.
    :param spec: CoveringSpec.
    :return: mapping residue j -> base element.
    """
    if a.theta != spec.cover_theta:
        raise ThetaMismatchError(f'Element lives over {a.theta.entries}, the covering cover is '
                                 f'{spec.cover_theta.entries}')
    cover = spec.cover_theta.array
    parts: Dict[Tuple[int, ...], Dict[Tuple[int, ...], complex]] = {j: {} for j in generator_box(spec)}
    for l, v in a.coeffs.items():
        j = tuple(l_mu % k_mu for l_mu, k_mu in zip(l, spec.k))
        q = tuple((l_mu - j_mu) // k_mu for l_mu, j_mu, k_mu in zip(l, j, spec.k))
        lifted_q = np.array([k_mu * q_mu for k_mu, q_mu in zip(spec.k, q)], dtype=float)
        phase = cmath.exp(1j * cmath.pi * float(np.array(j, dtype=float) @ cover @ lifted_q))
        parts[j][q] = v * phase
    return {j: TorusElement(theta=spec.base_theta, coeffs=coeffs) for j, coeffs in parts.items()}


def module_recompose(parts: Dict[Tuple[int, ...], TorusElement], spec: CoveringSpec) -> TorusElement:
    """
    Σ_j Ũ_j ⋆ embed(x_j).
    """
    total = TorusElement(theta=spec.cover_theta, coeffs={})
    for j, x in parts.items():
        total = total + star_product(TorusElement(theta=spec.cover_theta, coeffs={j: 1.0}), embed(x, spec))
    return total
