from dataclasses import dataclass
from itertools import product
from typing import Sequence, Tuple
import numpy as np
from nctorus.exceptions import DimensionMismatchError, InvalidParameterError

LatticeIndex = Tuple[int, ...]


def as_lattice_index(k: Sequence[int], n: int = None) -> LatticeIndex:
    """
    Normalize a lattice point to a tuple of python ints.

    :param k: integer vector.
    :param n: expected length, optional.
    :return: LatticeIndex.
    """
    index = tuple(int(v) for v in k)
    if n is not None and len(index) != n:
        raise DimensionMismatchError(f'Lattice index {index} must have length {n}')
    return index


@dataclass(frozen=True)
class TruncationWindow:
    """
    Box of lattice points |k_j| <= radius in Z^n, ordered lexicographically.
    """
    n: int
    radius: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError(f'Dimension must be >= 1, but was given: {self.n}')
        if self.radius < 0:
            raise InvalidParameterError(f'Window radius must be >= 0, but was given: {self.radius}')

    @property
    def side(self) -> int:
        return 2 * self.radius + 1

    @property
    def size(self) -> int:
        return self.side ** self.n

    def points(self) -> np.ndarray:
        """
        All (2R+1)^n window points as a (size, n) integer array, lexicographic order.
        """
        axis = range(-self.radius, self.radius + 1)
        return np.array(list(product(axis, repeat=self.n)), dtype=np.int64).reshape(self.size, self.n)

    def contains(self, points: np.ndarray) -> np.ndarray:
        """
        Boolean mask of rows of `points` lying inside the box.
        """
        return np.all(np.abs(np.atleast_2d(points)) <= self.radius, axis=1)

    def linear_index(self, points: np.ndarray) -> np.ndarray:
        """
        Position of in-window points in the lexicographic enumeration.
        """
        shifted = np.atleast_2d(points) + self.radius
        strides = self.side ** np.arange(self.n - 1, -1, -1, dtype=np.int64)
        return shifted @ strides

    def index_of(self, k: Sequence[int]) -> int:
        index = as_lattice_index(k, self.n)
        if not self.contains(np.array([index]))[0]:
            raise InvalidParameterError(f'Point {index} lies outside the window of radius {self.radius}')
        return int(self.linear_index(np.array([index]))[0])


def interior_indices(window: TruncationWindow, radius: int) -> np.ndarray:
    """
    Window positions p with |p_j| <= window.radius - radius: every shift of p by a lattice vector of
    sup-norm <= radius stays inside the window.

    :param window: TruncationWindow.
    :param radius: sup-norm bound of the shifts.
    :return: sorted array of window positions.
    """
    mask = np.all(np.abs(window.points()) <= window.radius - radius, axis=1)
    return np.flatnonzero(mask)
