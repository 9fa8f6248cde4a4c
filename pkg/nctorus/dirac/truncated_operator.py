import logging
import warnings
from dataclasses import dataclass
import numpy as np
from nctorus.algebra import TorusElement, TruncationWindow, interior_indices
from nctorus.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TruncatedOperator:
    """
    Dense operator on the truncated Hilbert space. Basis order is (copy) x (window point, lexicographic) x
    (spinor component); `copies` is 2^s for the representations π^s and 1 otherwise.
    """
    window: TruncationWindow
    spinor_dim: int
    matrix: np.ndarray
    copies: int = 1

    def __post_init__(self) -> None:
        dim = self.copies * self.window.size * self.spinor_dim
        if self.matrix.shape != (dim, dim):
            raise DimensionMismatchError(f'Operator matrix must be {dim}x{dim} for window radius '
                                         f'{self.window.radius}, n = {self.window.n}, spinor dimension '
                                         f'{self.spinor_dim} and {self.copies} copies, but has shape '
                                         f'{self.matrix.shape}')

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def basis_columns(self, positions: np.ndarray) -> np.ndarray:
        """
        Basis indices of all copies and spinor components over the given window positions.
        """
        size, m = self.window.size, self.spinor_dim
        copy_offsets = np.arange(self.copies)[:, None, None] * size * m
        point_offsets = np.asarray(positions)[None, :, None] * m
        return (copy_offsets + point_offsets + np.arange(m)[None, None, :]).reshape(-1)

    def interior_columns(self, radius: int) -> np.ndarray:
        positions = interior_indices(self.window, radius)
        if positions.size == 0:
            warnings.warn(f'Interior block of radius {radius} is empty for window radius {self.window.radius}',
                          UserWarning)
        return self.basis_columns(positions)

    def interior_block(self, radius: int) -> np.ndarray:
        """
        All rows, columns whose window point p satisfies |p_j| <= window.radius - radius.
        """
        return self.matrix[:, self.interior_columns(radius)]

    def with_spinors(self, m: int) -> 'TruncatedOperator':
        """
        Tensor a scalar operator with the identity on C^m.
        """
        if self.spinor_dim != 1:
            raise DimensionMismatchError(f'Operator already acts on spinors of dimension {self.spinor_dim}')
        return TruncatedOperator(window=self.window, spinor_dim=m, copies=self.copies,
                                 matrix=np.kron(self.matrix, np.eye(m, dtype=complex)))

    def spectral_norm(self) -> float:
        return float(np.linalg.norm(self.matrix, 2)) if self.dim else 0.0

    def hermiticity_residual(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T))) if self.dim else 0.0

    def __matmul__(self, other: 'TruncatedOperator') -> 'TruncatedOperator':
        return TruncatedOperator(window=self.window, spinor_dim=self.spinor_dim, copies=self.copies,
                                 matrix=self.matrix @ other.matrix)

    def __sub__(self, other: 'TruncatedOperator') -> 'TruncatedOperator':
        return TruncatedOperator(window=self.window, spinor_dim=self.spinor_dim, copies=self.copies,
                                 matrix=self.matrix - other.matrix)

    def __add__(self, other: 'TruncatedOperator') -> 'TruncatedOperator':
        return TruncatedOperator(window=self.window, spinor_dim=self.spinor_dim, copies=self.copies,
                                 matrix=self.matrix + other.matrix)


def represent(a: TorusElement, window: TruncationWindow) -> TruncatedOperator:
    """
    GNS representation on the truncated ℓ²(Z^n): entry (q, p) = â(q - p) exp(-πi (q - p)·Θp).
    Modes leaving the window are dropped.

    :param a: TorusElement.
    :param window: TruncationWindow of the same dimension.
    :return: TruncatedOperator with spinor dimension 1.
    """
    if a.n != window.n:
        raise DimensionMismatchError(f'Element dimension {a.n} differs from window dimension {window.n}')
    points = window.points()
    matrix = np.zeros((window.size, window.size), dtype=complex)
    theta = a.theta.array
    columns = np.arange(window.size)
    for k, value in a.sorted_items():
        shift = np.array(k, dtype=np.int64)
        targets = points + shift
        inside = window.contains(targets)
        phases = np.exp(-1j * np.pi * (points[inside] @ (shift @ theta)))
        matrix[window.linear_index(targets[inside]), columns[inside]] += value * phases
    logger.debug('represented element with %d coefficients on a window of size %d', len(a.coeffs), window.size)
    return TruncatedOperator(window=window, spinor_dim=1, matrix=matrix)
