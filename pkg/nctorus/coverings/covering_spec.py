import cmath
import logging
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import List, Sequence, Tuple
from nctorus.algebra import SkewMatrix
from nctorus.exceptions import DimensionMismatchError, InvalidParameterError, SizeCapError
from nctorus.global_settings import settings

logger = logging.getLogger(__name__)

COMPATIBILITY_TOLERANCE = 1e-13


@dataclass(frozen=True)
class CoveringSpec:
    """
    Finite-fold covering C(T^n_Θ) -> C(T^n_Θ̃) with multiplicities k and deck group Z_k1 x ... x Z_kn.
    The angles satisfy exp(-2πi θ_rs) = exp(-2πi θ̃_rs k_r k_s).
    """
    k: Tuple[int, ...]
    base_theta: SkewMatrix
    cover_theta: SkewMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, 'k', tuple(int(v) for v in self.k))
        n = self.base_theta.n
        if len(self.k) != n or self.cover_theta.n != n:
            raise DimensionMismatchError(f'Multiplicities {self.k}, base Θ of dimension {n} and cover Θ of '
                                         f'dimension {self.cover_theta.n} disagree')
        if any(v < 1 for v in self.k):
            raise InvalidParameterError(f'Cover multiplicities must be >= 1, but was given: {self.k}')
        for r in range(n):
            for s in range(n):
                base = cmath.exp(-2j * cmath.pi * self.base_theta.entries[r][s])
                cover = cmath.exp(-2j * cmath.pi * self.cover_theta.entries[r][s] * self.k[r] * self.k[s])
                if abs(base - cover) > COMPATIBILITY_TOLERANCE:
                    raise InvalidParameterError(f'Cover Θ is not compatible with base Θ at ({r}, {s}): '
                                                f'|{base} - {cover}| > {COMPATIBILITY_TOLERANCE}')

    @property
    def n(self) -> int:
        return self.base_theta.n

    @property
    def group_order(self) -> int:
        return prod(self.k)

    def compatibility_residual(self) -> float:
        return max(abs(cmath.exp(-2j * cmath.pi * self.base_theta.entries[r][s])
                       - cmath.exp(-2j * cmath.pi * self.cover_theta.entries[r][s] * self.k[r] * self.k[s]))
                   for r in range(self.n) for s in range(self.n))


def make_covering(base_theta: SkewMatrix, k: Sequence[int]) -> CoveringSpec:
    """
    Canonical covering with θ̃_rs = θ_rs / (k_r k_s).

    :param base_theta: deformation matrix of the base torus.
    :param k: positive multiplicity per axis.
    :return: CoveringSpec.
    """
    if len(k) != base_theta.n:
        raise DimensionMismatchError(f'Expected {base_theta.n} multiplicities, but was given: {tuple(k)}')
    if any(int(v) < 1 for v in k):
        raise InvalidParameterError(f'Cover multiplicities must be >= 1, but was given: {tuple(k)}')
    return CoveringSpec(k=tuple(k), base_theta=base_theta, cover_theta=base_theta.scaled(k))


@dataclass(frozen=True)
class DeckElement:
    """
    Element (p̄_1, ..., p̄_n) of Z_k1 x ... x Z_kn, residues reduced modulo k.
    """
    residues: Tuple[int, ...]

    @classmethod
    def reduce(cls, residues: Sequence[int], k: Sequence[int]) -> 'DeckElement':
        if len(residues) != len(k):
            raise DimensionMismatchError(f'Residue vector {tuple(residues)} does not match multiplicities {tuple(k)}')
        return cls(residues=tuple(int(p) % int(m) for p, m in zip(residues, k)))

    @property
    def is_identity(self) -> bool:
        return not any(self.residues)


def deck_group(spec: CoveringSpec) -> List[DeckElement]:
    """
    All deck transformations, lexicographic order of residues.
    """
    if spec.group_order > settings.deck_group_cap:
        raise SizeCapError(f'Deck group of order {spec.group_order} exceeds the cap {settings.deck_group_cap}')
    logger.debug('enumerating deck group of order %d', spec.group_order)
    return [DeckElement(residues=tuple(p)) for p in product(*(range(m) for m in spec.k))]


def deck_compose(g: DeckElement, h: DeckElement, spec: CoveringSpec) -> DeckElement:
    return DeckElement.reduce([a + b for a, b in zip(g.residues, h.residues)], spec.k)


def deck_inverse(g: DeckElement, spec: CoveringSpec) -> DeckElement:
    return DeckElement.reduce([-a for a in g.residues], spec.k)
