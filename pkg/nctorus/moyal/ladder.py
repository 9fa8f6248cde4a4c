from dataclasses import dataclass
from functools import lru_cache
import numpy as np
from nctorus.exceptions import InvalidParameterError
from .moyal_matrix import MoyalMatrix

SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class LadderSet:
    """
    Multipliers of the θ = 2 Moyal plane in the f_mn basis: a×f_mn = √(2m) f_{m-1,n}, ā = aᵀ,
    q = (a + ā)/√2, p = (a - ā)/(i√2), H×f_mn = (2m + 1) f_mn.
    """
    A: np.ndarray
    Abar: np.ndarray
    Q: np.ndarray
    P: np.ndarray
    H: np.ndarray

    @property
    def size(self) -> int:
        return self.A.shape[0]

    def operator(self, name: str) -> np.ndarray:
        operators = {'a': self.A, 'abar': self.Abar, 'q': self.Q, 'p': self.P, 'H': self.H}
        if name not in operators:
            raise InvalidParameterError(f'{name} is not expected, please use one of: {tuple(operators)}')
        return operators[name]


@lru_cache(maxsize=16)
def ladder_set(size: int) -> LadderSet:
    """
    Truncated ladder, position, momentum and Hamiltonian matrices.

    :param size: truncation M >= 2.
    :return: LadderSet.
    """
    if size < 2:
        raise InvalidParameterError(f'Truncation must be >= 2, but was given: {size}')
    a = np.diag(np.sqrt(2.0 * np.arange(1, size)), k=1).astype(complex)
    abar = a.T.copy()
    q = (a + abar) / SQRT2
    p = (a - abar) / (1j * SQRT2)
    h = np.diag(2.0 * np.arange(size) + 1.0).astype(complex)
    for matrix in (a, abar, q, p, h):
        matrix.setflags(write=False)
    return LadderSet(A=a, Abar=abar, Q=q, P=p, H=h)


def ladder_act(x: MoyalMatrix, name: str, side: str = 'left', factor: int = 0) -> MoyalMatrix:
    """
    Left (name × x) or right (x × name) multiplication of one tensor factor by a, ā, q, p or H.
    Banded multipliers raise the margin by one, H is diagonal and keeps it.

    :param x: MoyalMatrix.
    :param name: one of 'a', 'abar', 'q', 'p', 'H'.
    :param side: 'left' or 'right'.
    :param factor: index of the tensor factor acted upon.
    :return: MoyalMatrix.
    """
    if side not in ('left', 'right'):
        raise InvalidParameterError(f'side must be equal "left" or "right", not {side}')
    if not 0 <= factor < x.N:
        raise InvalidParameterError(f'Factor index must be in 0..{x.N - 1}, but was given: {factor}')
    multiplier = ladder_set(x.size).operator(name)
    factors = list(x.factors)
    factors[factor] = multiplier @ factors[factor] if side == 'left' else factors[factor] @ multiplier
    return x.with_factors(factors, x.margin + (0 if name == 'H' else 1))
