import cmath
from math import lcm
from typing import Sequence
from nctorus.algebra import TorusElement
from nctorus.exceptions import DimensionMismatchError
from .covering_spec import CoveringSpec, DeckElement, deck_group


def character_phase(g: DeckElement, l: Sequence[int], k: Sequence[int]) -> complex:
    """
    exp(2πi Σ_j p_j l_j / k_j), evaluated through an integer numerator over lcm(k) so that equal characters
    give bitwise equal phases and trivial characters give exactly 1.
    """
    modulus = lcm(*k)
    numerator = sum(p * l_j * (modulus // k_j) for p, l_j, k_j in zip(g.residues, l, k)) % modulus
    if numerator == 0:
        return 1.0 + 0j
    return cmath.exp(2j * cmath.pi * numerator / modulus)


def deck_action(g: DeckElement, a: TorusElement, spec: CoveringSpec) -> TorusElement:
    """
    (p̄_1, ..., p̄_n) Ũ_l = exp(2πi Σ_j p_j l_j / k_j) Ũ_l, extended linearly.

    :param g: DeckElement.
    :param a: element of the cover torus.
    :param spec: CoveringSpec.
    :return: TorusElement over the cover Θ.
    """
    if len(g.residues) != spec.n or a.n != spec.n:
        raise DimensionMismatchError(f'Deck element {g.residues} and element of dimension {a.n} do not match '
                                     f'the covering of dimension {spec.n}')
    return a.map_coefficients(lambda l, value: character_phase(g, l, spec.k) * value)


def on_k_lattice(l: Sequence[int], k: Sequence[int]) -> bool:
    return all(l_j % k_j == 0 for l_j, k_j in zip(l, k))


def invariant_projection(a: TorusElement, spec: CoveringSpec) -> TorusElement:
    """
    Average (1/|G|) Σ_g g(a). The characters of G sum to |G| on the lattice k_1 Z x ... x k_n Z and to 0
    elsewhere, so the average keeps exactly the coefficients supported on that lattice.
    """
    return TorusElement(theta=a.theta, coeffs={l: v for l, v in a.coeffs.items() if on_k_lattice(l, spec.k)})


def deck_action_is_free(spec: CoveringSpec) -> bool:
    """
    Every nontrivial g moves some generator Ũ_{e_j}.
    """
    basis = [tuple(int(i == j) for i in range(spec.n)) for j in range(spec.n)]
    return all(any(character_phase(g, l, spec.k) != 1 for l in basis)
               for g in deck_group(spec) if not g.is_identity)
