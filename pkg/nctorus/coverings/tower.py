import logging
from dataclasses import dataclass, field
from math import prod
from typing import Dict, List, Sequence, Tuple
from nctorus.algebra import SkewMatrix, TorusElement
from nctorus.exceptions import InvalidParameterError
from .covering_spec import CoveringSpec, DeckElement
from .module_structure import embed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TowerReport:
    """
    Group-order table of a covering tower. orders[(j, i)] = |G(j|i)| for levels i < j, level 0 is the base.
    """
    moduli: Tuple[int, ...]
    orders: Dict[Tuple[int, int], int] = field(hash=False)
    exactness: Tuple[Tuple[int, int, int, bool], ...]
    kernel_sizes: Tuple[int, ...]

    @property
    def exact(self) -> bool:
        return all(ok for *_, ok in self.exactness)


def tower_build(base_theta: SkewMatrix, primes: Sequence[int]) -> List[CoveringSpec]:
    """
    Tower C(T^n_θ) -> C(T^n_{θ/m_1²}) -> ... with m_j = p_1 ... p_j. Step j covers step j - 1 with
    multiplicities (p_j, ..., p_j); the cover Θ of step j is base_theta / m_j² entrywise.

    :param base_theta: deformation of the base torus, n even.
    :param primes: factors p_j >= 2.
    :return: list of CoveringSpec, one per step.
    """
    n = base_theta.n
    if n % 2:
        raise InvalidParameterError(f'Covering towers need an even dimension, but was given: {n}')
    if any(int(p) < 2 for p in primes):
        raise InvalidParameterError(f'Tower factors must be >= 2, but was given: {tuple(primes)}')
    specs = []
    previous, modulus = base_theta, 1
    for p in primes:
        modulus *= int(p)
        cover = base_theta.scaled((modulus,) * n)
        specs.append(CoveringSpec(k=(int(p),) * n, base_theta=previous, cover_theta=cover))
        logger.debug('tower step p = %d, m = %d', p, modulus)
        previous = cover
    return specs


def tower_moduli(specs: Sequence[CoveringSpec]) -> Tuple[int, ...]:
    """
    m_0 = 1, m_1, ..., m_J.
    """
    moduli = [1]
    for spec in specs:
        moduli.append(moduli[-1] * spec.k[0])
    return tuple(moduli)


def one_shot_covering(specs: Sequence[CoveringSpec]) -> CoveringSpec:
    """
    Covering of the base by the top of the tower, multiplicities m_J.
    """
    modulus = tower_moduli(specs)[-1]
    return CoveringSpec(k=(modulus,) * specs[0].n, base_theta=specs[0].base_theta, cover_theta=specs[-1].cover_theta)


def compose_embeddings(a: TorusElement, specs: Sequence[CoveringSpec]) -> TorusElement:
    for spec in specs:
        a = embed(a, spec)
    return a


def reduce_deck(g: DeckElement, to_modulus: int) -> DeckElement:
    """
    Epimorphism Z^n_{m_j} -> Z^n_{m_i}, residues reduced modulo m_i (m_i divides m_j).
    """
    return DeckElement(residues=tuple(p % to_modulus for p in g.residues))


def tower_report(specs: Sequence[CoveringSpec]) -> TowerReport:
    """
    Orders |G(j|i)| = (m_j / m_i)^n, exactness |G(m|k)| = |G(m|l)| |G(l|k)| for k < l < m and the kernel size
    of every reduction Z^n_{m_j} -> Z^n_{m_{j-1}}.
    """
    moduli = tower_moduli(specs)
    n = specs[0].n
    levels = range(len(moduli))
    orders = {(j, i): (moduli[j] // moduli[i]) ** n for j in levels for i in levels if i < j}
    exactness = tuple((m, l, k, orders[(m, k)] == orders[(m, l)] * orders[(l, k)])
                      for m in levels for l in levels for k in levels if k < l < m)
    kernel_sizes = tuple(prod(spec.k) for spec in specs)
    return TowerReport(moduli=moduli, orders=orders, exactness=exactness, kernel_sizes=kernel_sizes)
