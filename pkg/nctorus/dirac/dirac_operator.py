import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple
import numpy as np
from scipy import linalg
from nctorus.algebra import SkewMatrix, TorusElement, TruncationWindow, delta
from nctorus.exceptions import DimensionMismatchError
from .gamma import GammaSet, gamma_set
from .truncated_operator import TruncatedOperator, represent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectrumReport:
    """
    Sorted eigenvalues of a truncated Dirac operator.
    """
    eigenvalues: Tuple[float, ...]
    window: TruncationWindow
    theta: SkewMatrix

    def multiplicities(self, tol: float = 1e-9) -> Dict[float, int]:
        """
        Group eigenvalues closer than tol, keyed by the first value of each cluster.
        """
        counts: Dict[float, int] = {}
        anchor: Optional[float] = None
        for value in self.eigenvalues:
            if anchor is None or value - anchor > tol:
                anchor = value
                counts[anchor] = 0
            counts[anchor] += 1
        return counts


def slash_operator(window: TruncationWindow, vectors: np.ndarray, gammas: GammaSet) -> TruncatedOperator:
    """
    Block-diagonal operator with block Σ_μ vectors[p, μ] γ^μ at window position p.
    """
    matrix = np.zeros((window.size * gammas.m, window.size * gammas.m), dtype=complex)
    for mu, gamma in enumerate(gammas.matrices):
        matrix += np.kron(np.diag(vectors[:, mu].astype(complex)), gamma)
    return TruncatedOperator(window=window, spinor_dim=gammas.m, matrix=matrix)


def dirac_matrix(theta: SkewMatrix, window: TruncationWindow) -> TruncatedOperator:
    """
    Truncated D = Σ_μ δ_μ ⊗ γ^μ: block Σ_μ k_μ γ^μ at every lattice point k of the window.

    :param theta: deformation matrix, only its dimension enters.
    :param window: TruncationWindow.
    :return: Hermitian TruncatedOperator.
    """
    if theta.n != window.n:
        raise DimensionMismatchError(f'Θ dimension {theta.n} differs from window dimension {window.n}')
    logger.debug('building Dirac matrix, n = %d, radius = %d', window.n, window.radius)
    return slash_operator(window, window.points().astype(float), gamma_set(window.n))


def commutator(dirac: TruncatedOperator, operator: TruncatedOperator) -> TruncatedOperator:
    """
    D·A - A·D with a scalar A tensored onto the spinors of D.
    """
    if operator.spinor_dim == 1 and dirac.spinor_dim != 1:
        operator = operator.with_spinors(dirac.spinor_dim)
    return dirac @ operator - operator @ dirac


def dirac_commutator(a: TorusElement, window: TruncationWindow) -> TruncatedOperator:
    """
    [D, π(a)] on the truncated space.
    """
    return commutator(dirac_matrix(a.theta, window), represent(a, window))


def derivation_commutator(a: TorusElement, window: TruncationWindow) -> TruncatedOperator:
    """
    Σ_μ π(δ_μ a) ⊗ γ^μ, the value of [D, a] predicted by the derivations.
    """
    gammas = gamma_set(a.n)
    matrix = np.zeros((window.size * gammas.m,) * 2, dtype=complex)
    for mu in range(1, a.n + 1):
        matrix += np.kron(represent(delta(a, mu), window).matrix, gammas[mu])
    return TruncatedOperator(window=window, spinor_dim=gammas.m, matrix=matrix)


def spectrum_of(operator: TruncatedOperator, theta: SkewMatrix) -> SpectrumReport:
    eigenvalues = linalg.eigvalsh(operator.matrix)
    return SpectrumReport(eigenvalues=tuple(float(v) for v in np.sort(eigenvalues)), window=operator.window,
                          theta=theta)


def dirac_spectrum(theta: SkewMatrix, window: TruncationWindow) -> SpectrumReport:
    """
    Ascending eigenvalues of the truncated Dirac operator.
    """
    return spectrum_of(dirac_matrix(theta, window), theta)
