from dataclasses import dataclass
from typing import Tuple
import numpy as np
from nctorus.exceptions import InvalidParameterError

SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True, eq=False)
class GammaSet:
    """
    Hermitian generators γ^1..γ^n of the Clifford algebra, γ^iγ^j + γ^jγ^i = 2δ^{ij}, of size m = 2^⌊n/2⌋.
    """
    n: int
    matrices: Tuple[np.ndarray, ...]

    @property
    def m(self) -> int:
        return self.matrices[0].shape[0]

    def __getitem__(self, mu: int) -> np.ndarray:
        """
        γ^mu with a 1-based axis.
        """
        return self.matrices[mu - 1]

    def slash(self, k) -> np.ndarray:
        """
        Σ_μ k_μ γ^μ for a real vector k.
        """
        out = np.zeros((self.m, self.m), dtype=complex)
        for k_mu, gamma in zip(k, self.matrices):
            out = out + k_mu * gamma
        return out

    def clifford_residual(self) -> float:
        """
        max over i, j of ‖γ^iγ^j + γ^jγ^i - 2δ^{ij} I‖_max.
        """
        eye = np.eye(self.m, dtype=complex)
        residual = 0.0
        for i, g_i in enumerate(self.matrices):
            for j, g_j in enumerate(self.matrices):
                target = 2 * eye if i == j else 0 * eye
                residual = max(residual, float(np.max(np.abs(g_i @ g_j + g_j @ g_i - target))))
        return residual

    def hermiticity_residual(self) -> float:
        return max(float(np.max(np.abs(g - g.conj().T))) for g in self.matrices)


def gamma_set(n: int) -> GammaSet:
    """
    Canonical gamma matrices by tensor doubling. Two axes are added per step:
    {γ} -> {σ_1 ⊗ γ} ∪ {σ_2 ⊗ I, σ_3 ⊗ I}; odd n takes the even set for n - 1 and appends
    i^{(n-1)/2} γ^1 ... γ^{n-1}.

    :param n: dimension, n >= 1.
    :return: GammaSet.
    """
    if n < 1:
        raise InvalidParameterError(f'Clifford dimension must be >= 1, but was given: {n}')
    if n == 1:
        return GammaSet(n=1, matrices=(np.eye(1, dtype=complex),))
    even = n - n % 2
    gammas = [SIGMA_1, SIGMA_2]
    for _ in range(2, even, 2):
        eye = np.eye(gammas[0].shape[0], dtype=complex)
        gammas = [np.kron(SIGMA_1, g) for g in gammas] + [np.kron(SIGMA_2, eye), np.kron(SIGMA_3, eye)]
    if n % 2:
        chirality = (1j ** (even // 2)) * gammas[0]
        for g in gammas[1:]:
            chirality = chirality @ g
        gammas.append(chirality)
    for g in gammas:
        g.setflags(write=False)
    return GammaSet(n=n, matrices=tuple(gammas))


def spinor_dimension(n: int) -> int:
    return 2 ** (n // 2)
