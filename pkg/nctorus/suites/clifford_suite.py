from nctorus.dirac import gamma_set, spinor_dimension
from .base_suite import BaseSuite
from .verification_report import VerificationReport


class CliffordSuite(BaseSuite):
    """
    Anticommutation, hermiticity and size of the gamma matrices for n = 1..max_dim.
    """
    name = 'clifford'

    def __init__(self, seed: int = None, tol: float = None, max_dim: int = 6) -> None:
        super().__init__(seed, tol)
        self.max_dim = max_dim

    def execute(self, report: VerificationReport) -> None:
        for n in range(1, self.max_dim + 1):
            gammas = gamma_set(n)
            self.check(report, f'anticommutator.n{n}', 'γ^iγ^j + γ^jγ^i = 2δ^{ij}', gammas.clifford_residual(), 1e-14)
            self.check(report, f'hermitian.n{n}', '(γ^μ)* = γ^μ', gammas.hermiticity_residual(), 1e-14)
            self.check(report, f'size.n{n}', 'plumbing', abs(gammas.m - spinor_dimension(n)), 0.0)
