from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple
import numpy as np
from nctorus.exceptions import DimensionMismatchError, ThetaMismatchError
from nctorus.global_settings import settings
from .skew_matrix import SkewMatrix
from .truncation_window import LatticeIndex, as_lattice_index


@dataclass(frozen=True, eq=False)
class TorusElement:
    """
    Element of the smooth noncommutative torus C∞(T^n_Θ): a finitely supported map of Fourier
    coefficients Z^n -> C bound to its deformation matrix.

    Coefficients with magnitude below settings.prune_threshold are dropped on construction, so exact
    zeros never appear in `coeffs`.
    """
    theta: SkewMatrix
    coeffs: Mapping[LatticeIndex, complex]

    def __post_init__(self) -> None:
        n = self.theta.n
        threshold = settings.prune_threshold
        clean: Dict[LatticeIndex, complex] = {}
        for key, value in self.coeffs.items():
            index = as_lattice_index(key)
            if len(index) != n:
                raise DimensionMismatchError(f'Coefficient index {index} has length {len(index)}, '
                                             f'but the torus dimension is {n}')
            value = complex(value)
            if abs(value) >= threshold and value != 0:
                clean[index] = clean.get(index, 0j) + value
        object.__setattr__(self, 'coeffs', clean)

    @classmethod
    def from_arrays(cls, theta: SkewMatrix, keys: np.ndarray, values: np.ndarray) -> 'TorusElement':
        """
        Build an element from parallel arrays of unique lattice points and coefficients.
        """
        return cls(theta=theta, coeffs={tuple(int(v) for v in key): complex(value)
                                        for key, value in zip(keys, values)})

    @property
    def n(self) -> int:
        return self.theta.n

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def sorted_items(self) -> Sequence[Tuple[LatticeIndex, complex]]:
        """
        Coefficients in lexicographic order of their lattice points.
        """
        return sorted(self.coeffs.items())

    def arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        Support as a (size, n) integer array and coefficients as a complex vector, lexicographic order.
        """
        items = self.sorted_items()
        keys = np.array([key for key, _ in items], dtype=np.int64).reshape(len(items), self.n)
        values = np.array([value for _, value in items], dtype=complex)
        return keys, values

    def support_radius(self) -> int:
        """
        Largest |k_j| over the support, 0 for the zero element.
        """
        return max((max(abs(v) for v in key) for key in self.coeffs), default=0)

    def coefficient(self, k: Sequence[int]) -> complex:
        return self.coeffs.get(as_lattice_index(k, self.n), 0j)

    def check_same_theta(self, other: 'TorusElement') -> None:
        if self.theta != other.theta:
            raise ThetaMismatchError(f'Operands live over different deformations: {self.theta.entries} '
                                     f'and {other.theta.entries}')

    def scale(self, factor: complex) -> 'TorusElement':
        return TorusElement(theta=self.theta, coeffs={k: factor * v for k, v in self.coeffs.items()})

    def map_coefficients(self, func) -> 'TorusElement':
        """
        Apply func(index, value) -> value to every coefficient.
        """
        return TorusElement(theta=self.theta, coeffs={k: func(k, v) for k, v in self.coeffs.items()})

    def __add__(self, other: 'TorusElement') -> 'TorusElement':
        self.check_same_theta(other)
        coeffs = dict(self.coeffs)
        for k, v in other.coeffs.items():
            coeffs[k] = coeffs.get(k, 0j) + v
        return TorusElement(theta=self.theta, coeffs=coeffs)

    def __sub__(self, other: 'TorusElement') -> 'TorusElement':
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.theta == other.theta and self.coeffs == other.coeffs

    __hash__ = None

    def max_distance(self, other: 'TorusElement') -> float:
        """
        Sup-norm of the coefficient difference over the union of supports.
        """
        if self.n != other.n:
            raise DimensionMismatchError(f'Cannot compare elements of dimensions {self.n} and {other.n}')
        keys = set(self.coeffs) | set(other.coeffs)
        return max((abs(self.coeffs.get(k, 0j) - other.coeffs.get(k, 0j)) for k in keys), default=0.0)

    def l2_norm_squared(self) -> float:
        return float(sum(abs(v) ** 2 for v in self.coeffs.values()))


def make_unitary(k: Sequence[int], theta: SkewMatrix) -> TorusElement:
    """
    Basis unitary U_k, the element with a single coefficient 1 at k.

    :param k: lattice point of length theta.n.
    :param theta: deformation matrix.
    :return: TorusElement.
    """
    if len(k) != theta.n:
        raise DimensionMismatchError(f'Lattice index {tuple(k)} has length {len(k)}, '
                                     f'but the torus dimension is {theta.n}')
    return TorusElement(theta=theta, coeffs={as_lattice_index(k): 1.0})


def identity(theta: SkewMatrix) -> TorusElement:
    return make_unitary((0,) * theta.n, theta)


def generator(j: int, theta: SkewMatrix) -> TorusElement:
    """
    Generator u_j = U_{e_j}, j is 1-based.
    """
    if not 1 <= j <= theta.n:
        raise DimensionMismatchError(f'Generator index must be in 1..{theta.n}, but was given: {j}')
    k = [0] * theta.n
    k[j - 1] = 1
    return make_unitary(k, theta)
