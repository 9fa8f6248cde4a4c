import cmath
from itertools import product
from math import prod
from nctorus.algebra import TorusElement
from nctorus.exceptions import SizeCapError
from nctorus.global_settings import settings


def brute_group_average(a: TorusElement, spec) -> TorusElement:
    """
    Literal average (1/|G|) Σ_g g(a) over every residue vector of Z_k1 x ... x Z_kn.
    """
    order = prod(spec.k)
    if order > settings.deck_group_cap:
        raise SizeCapError(f'Deck group of order {order} exceeds the cap {settings.deck_group_cap}')
    result = {l: 0j for l in a.coeffs}
    for residues in product(*(range(m) for m in spec.k)):
        for l, value in a.coeffs.items():
            angle = sum(2 * cmath.pi * p * l_j / k_j for p, l_j, k_j in zip(residues, l, spec.k))
            result[l] += cmath.exp(1j * angle) * value
    return TorusElement(theta=a.theta, coeffs={l: v / order for l, v in result.items()})
