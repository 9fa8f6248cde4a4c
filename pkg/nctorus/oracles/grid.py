from dataclasses import dataclass
from itertools import product
from typing import Optional
import numpy as np
from nctorus.algebra import TorusElement
from nctorus.exceptions import DimensionMismatchError, InvalidParameterError, ThetaMismatchError


def _check_resolution(grid_size: int, max_frequency: int) -> None:
    if grid_size < 2 * max_frequency + 1:
        raise InvalidParameterError(f'Grid of {grid_size} points cannot resolve frequency {max_frequency}, '
                                    f'need at least {2 * max_frequency + 1}')


@dataclass(frozen=True, eq=False)
class GridFunction:
    """
    Samples of f(x) = Σ f̂(p) e^{2πi x·p} on the uniform grid x ∈ {0, 1/G, ..., (G-1)/G}^n, resolving frequencies
    |p_j| <= max_frequency.
    """
    n: int
    grid_size: int
    samples: np.ndarray
    max_frequency: int = 0

    def __post_init__(self) -> None:
        _check_resolution(self.grid_size, self.max_frequency)
        if self.samples.shape != (self.grid_size,) * self.n:
            raise DimensionMismatchError(f'Samples must have shape {(self.grid_size,) * self.n}, '
                                         f'but have {self.samples.shape}')

    @classmethod
    def synthesize(cls, a: TorusElement, grid_size: int, max_frequency: int) -> 'GridFunction':
        """
        :param a: element with Θ = 0.
        :param grid_size: points per axis G.
        :param max_frequency: largest frequency that will be recovered from this grid.
        :return: GridFunction.
        """
        _check_resolution(grid_size, max_frequency)
        spectrum = np.zeros((grid_size,) * a.n, dtype=complex)
        for p, value in a.coeffs.items():
            spectrum[tuple(v % grid_size for v in p)] += value
        return cls(n=a.n, grid_size=grid_size, samples=np.fft.ifftn(spectrum) * grid_size ** a.n,
                   max_frequency=max_frequency)

    def coefficients(self, theta, max_frequency: Optional[int] = None) -> TorusElement:
        """
        Forward transform f̂(p) = G^{-n} Σ_x f(x) e^{-2πi x·p} read at |p_j| <= max_frequency, the resolved
        frequency of the grid when None.
        """
        if max_frequency is None:
            max_frequency = self.max_frequency
        _check_resolution(self.grid_size, max_frequency)
        spectrum = np.fft.fftn(self.samples) / self.grid_size ** self.n
        axis = range(-max_frequency, max_frequency + 1)
        return TorusElement(theta=theta, coeffs={p: spectrum[tuple(v % self.grid_size for v in p)]
                                                 for p in product(axis, repeat=self.n)})


def sample_and_multiply(a: TorusElement, b: TorusElement, grid_size: int) -> TorusElement:
    """
    Commutative product through the grid: synthesize both, multiply pointwise, transform back.

    :param a: element with Θ = 0.
    :param b: element with Θ = 0.
    :param grid_size: points per axis, at least 2 (radius(a) + radius(b)) + 1.
    :return: TorusElement with Θ = 0.
    """
    if not a.theta.is_zero or a.theta != b.theta:
        raise ThetaMismatchError('Grid oracle needs two elements of the commutative torus')
    max_frequency = a.support_radius() + b.support_radius()
    f = GridFunction.synthesize(a, grid_size, max_frequency)
    g = GridFunction.synthesize(b, grid_size, max_frequency)
    product_grid = GridFunction(n=a.n, grid_size=grid_size, samples=f.samples * g.samples,
                                max_frequency=max_frequency)
    return product_grid.coefficients(a.theta)
