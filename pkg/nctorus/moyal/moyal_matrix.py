from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence, Tuple
import numpy as np
from nctorus.exceptions import DimensionMismatchError, InvalidParameterError, ThetaMismatchError
from nctorus.global_settings import settings


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=complex)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class MoyalMatrix:
    """
    Element Σ c_mn f_mn of the Moyal plane truncated to M x M coefficients. For N > 1 the element is kept as
    the list of its N tensor factors. `margin` counts the trailing rows and columns that banded operations
    have made untrustworthy.
    """
    theta: float
    factors: Tuple[np.ndarray, ...]
    margin: int = 0

    def __post_init__(self) -> None:
        if self.theta <= 0:
            raise InvalidParameterError(f'Moyal deformation θ must be > 0, but was given: {self.theta}')
        if not self.factors:
            raise DimensionMismatchError('A Moyal element needs at least one factor')
        factors = tuple(_frozen(c) for c in self.factors)
        size = factors[0].shape[0]
        for c in factors:
            if c.shape != (size, size):
                raise DimensionMismatchError(f'Every factor must be {size}x{size}, but was given: {c.shape}')
        if self.margin < 0:
            raise InvalidParameterError(f'Margin must be >= 0, but was given: {self.margin}')
        object.__setattr__(self, 'factors', factors)

    @classmethod
    def from_matrix(cls, c, theta: float = 2.0, margin: int = 0) -> 'MoyalMatrix':
        return cls(theta=theta, factors=(np.asarray(c, dtype=complex),), margin=margin)

    @classmethod
    def unit(cls, size: int, theta: float = 2.0) -> 'MoyalMatrix':
        """
        Σ_m f_mm, the identity coefficient matrix.
        """
        return cls.from_matrix(np.eye(size, dtype=complex), theta)

    @classmethod
    def basis(cls, m: int, n: int, size: int, theta: float = 2.0) -> 'MoyalMatrix':
        """
        f_mn, the matrix unit E_mn.
        """
        if not (0 <= m < size and 0 <= n < size):
            raise InvalidParameterError(f'Indices ({m}, {n}) outside the truncation {size}')
        c = np.zeros((size, size), dtype=complex)
        c[m, n] = 1.0
        return cls.from_matrix(c, theta)

    @property
    def size(self) -> int:
        return self.factors[0].shape[0]

    @property
    def N(self) -> int:
        return len(self.factors)

    @property
    def c(self) -> np.ndarray:
        if self.N != 1:
            raise DimensionMismatchError(f'Element has {self.N} tensor factors, use materialize()')
        return self.factors[0]

    def materialize(self) -> np.ndarray:
        """
        Full coefficient matrix c_1 ⊗ ... ⊗ c_N of size M^N.
        """
        return reduce(np.kron, self.factors)

    def with_factors(self, factors: Sequence[np.ndarray], margin: int) -> 'MoyalMatrix':
        return MoyalMatrix(theta=self.theta, factors=tuple(factors), margin=margin)

    def check_compatible(self, other: 'MoyalMatrix') -> None:
        if self.theta != other.theta:
            raise ThetaMismatchError(f'Moyal elements with different θ: {self.theta} and {other.theta}')
        if self.size != other.size or self.N != other.N:
            raise DimensionMismatchError(f'Moyal elements of shape (M={self.size}, N={self.N}) and '
                                         f'(M={other.size}, N={other.N})')

    def interior(self, extra: int = 0) -> np.ndarray:
        """
        Trusted block of a single-factor element: rows and columns below size - margin - extra.
        """
        cut = self.size - self.margin - extra
        return self.c[:cut, :cut]


def moyal_product(x: MoyalMatrix, y: MoyalMatrix) -> MoyalMatrix:
    """
    Star product in the matrix basis, (xy)_mn = Σ_k x_mk y_kn, factorwise for N > 1.

    :param x: left factor.
    :param y: right factor with the same θ, M and N.
    :return: MoyalMatrix with margin max(x.margin, y.margin).
    """
    x.check_compatible(y)
    return x.with_factors([a @ b for a, b in zip(x.factors, y.factors)], max(x.margin, y.margin))


def tensor_combine(factors: Sequence[MoyalMatrix]) -> MoyalMatrix:
    """
    Element of S(R^{2N}_θ) ≅ S(R²_θ) ⊗ ... ⊗ S(R²_θ) built from N single-factor elements.
    """
    if not factors:
        raise DimensionMismatchError('tensor_combine needs at least one factor')
    first = factors[0]
    for f in factors:
        if f.N != 1:
            raise DimensionMismatchError(f'Only single-factor elements can be combined, but was given N = {f.N}')
        first.check_compatible(f)
    return MoyalMatrix(theta=first.theta, factors=tuple(f.c for f in factors), margin=max(f.margin for f in factors))


def random_moyal(size: int, seed: Optional[int] = None, theta: float = 2.0, integer: bool = False,
                 bound: int = 3, support: Optional[int] = None) -> MoyalMatrix:
    """
    Seeded random coefficient matrix. With integer=True the entries are Gaussian integers in [-bound, bound],
    which keeps sums and products of small matrices exact in floating point. With `support` only the leading
    support x support block is populated.
    """
    if support is not None and not 0 < support <= size:
        raise InvalidParameterError(f'Support must be in 1..{size}, but was given: {support}')
    rng = np.random.default_rng(settings.rnd_seed if seed is None else seed)
    if integer:
        c = rng.integers(-bound, bound + 1, size=(size, size)) + 1j * rng.integers(-bound, bound + 1,
                                                                                   size=(size, size))
    else:
        c = rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size))
    if support is not None:
        c[support:, :] = 0
        c[:, support:] = 0
    return MoyalMatrix.from_matrix(c, theta)
