from dataclasses import dataclass
from typing import Sequence, Tuple
import numpy as np
from nctorus.exceptions import DimensionMismatchError, InvalidParameterError


@dataclass(frozen=True)
class SkewMatrix:
    """
    Real skew-symmetric n x n deformation matrix Θ, entries are the angles θ_jk.
    Skew symmetry is exact: the constructor rejects any entry with entries[j][k] != -entries[k][j].
    """
    n: int
    entries: Tuple[Tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError(f'Dimension of the torus must be >= 1, but was given: {self.n}')
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise DimensionMismatchError(f'Theta must be {self.n}x{self.n}, but was given rows of length: '
                                         f'{[len(row) for row in self.entries]}')
        for j in range(self.n):
            for k in range(self.n):
                if self.entries[j][k] != -self.entries[k][j]:
                    raise InvalidParameterError(f'Theta is not skew-symmetric at ({j}, {k}): '
                                                f'{self.entries[j][k]} vs {self.entries[k][j]}')

    @classmethod
    def from_array(cls, array: Sequence[Sequence[float]]) -> 'SkewMatrix':
        """
        Build Θ from a square array-like, entries are converted to python floats.

        :param array: square array of real numbers.
        :return: SkewMatrix.
        """
        arr = np.asarray(array, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionMismatchError(f'Theta must be a square matrix, but was given shape: {arr.shape}')
        return cls(n=arr.shape[0], entries=tuple(tuple(float(v) for v in row) for row in arr))

    @classmethod
    def from_upper(cls, n: int, upper: dict) -> 'SkewMatrix':
        """
        Build Θ from its strictly upper triangle.

        :param n: dimension of the torus.
        :param upper: mapping (j, k) -> θ_jk with 0 <= j < k < n (zero based).
        :return: SkewMatrix.
        """
        rows = [[0.0] * n for _ in range(n)]
        for (j, k), value in upper.items():
            if not 0 <= j < k < n:
                raise InvalidParameterError(f'Upper triangle index must satisfy 0 <= j < k < {n}, got ({j}, {k})')
            rows[j][k] = float(value)
            rows[k][j] = -float(value)
        return cls(n=n, entries=tuple(tuple(row) for row in rows))

    @classmethod
    def zero(cls, n: int) -> 'SkewMatrix':
        """
        Undeformed (commutative) torus.
        """
        return cls(n=n, entries=tuple((0.0,) * n for _ in range(n)))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    @property
    def is_zero(self) -> bool:
        return all(v == 0.0 for row in self.entries for v in row)

    def scaled(self, factors: Sequence[int]) -> 'SkewMatrix':
        """
        Entrywise division θ_rs / (factors_r * factors_s).

        :param factors: positive integer per axis.
        :return: SkewMatrix.
        """
        if len(factors) != self.n:
            raise DimensionMismatchError(f'Expected {self.n} factors, but was given: {len(factors)}')
        return SkewMatrix(n=self.n, entries=tuple(tuple(self.entries[r][s] / (factors[r] * factors[s])
                                                        for s in range(self.n)) for r in range(self.n)))


def standard_theta(theta: float, n: int = 2) -> SkewMatrix:
    """
    Θ = θJ with J = [[0, 1_N], [-1_N, 0]] and n = 2N.

    :param theta: deformation angle θ.
    :param n: even dimension of the torus.
    :return: SkewMatrix.
    """
    if n < 2 or n % 2:
        raise InvalidParameterError(f'Symplectic Θ = θJ needs an even dimension, but was given: {n}')
    half = n // 2
    return SkewMatrix.from_upper(n, {(j, j + half): theta for j in range(half)})
