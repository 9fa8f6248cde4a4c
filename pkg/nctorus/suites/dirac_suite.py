import numpy as np
from nctorus.algebra import SkewMatrix, TruncationWindow, random_element, standard_theta, star_product
from nctorus.dirac import (derivation_commutator, dirac_commutator, dirac_matrix, dirac_spectrum, pi_s, represent,
                           seminorm_s)
from .base_suite import BaseSuite
from .verification_report import VerificationReport

SQRT2 = np.sqrt(2.0)
UNIT_WINDOW_SPECTRUM = np.array([-SQRT2] * 4 + [-1.0] * 4 + [0.0] * 2 + [1.0] * 4 + [SQRT2] * 4)


class DiracSuite(BaseSuite):
    """
    Spectrum, isospectrality and commutator identities of the truncated Dirac operator on the 2-torus.
    """
    name = 'dirac'

    def __init__(self, seed: int = None, tol: float = None, max_radius: int = 4, commutator_radius: int = 8,
                 element_radius: int = 2) -> None:
        super().__init__(seed, tol)
        self.max_radius = max_radius
        self.commutator_radius = commutator_radius
        self.element_radius = element_radius

    def execute(self, report: VerificationReport) -> None:
        zero, deformed = SkewMatrix.zero(2), standard_theta(0.3)
        unit = dirac_spectrum(zero, TruncationWindow(n=2, radius=1))
        self.check(report, 'spectrum.unit_window', 'D = Σ_μ δ_μ ⊗ γ^μ',
                   float(np.max(np.abs(np.array(unit.eigenvalues) - UNIT_WINDOW_SPECTRUM))), 1e-12)

        iso_residual, hermitian_residual = 0.0, 0.0
        for radius in range(1, self.max_radius + 1):
            window = TruncationWindow(n=2, radius=radius)
            plain, twisted = dirac_spectrum(zero, window), dirac_spectrum(deformed, window)
            iso_residual = max(iso_residual,
                               float(np.max(np.abs(np.array(plain.eigenvalues) - np.array(twisted.eigenvalues)))))
            hermitian_residual = max(hermitian_residual, dirac_matrix(deformed, window).hermiticity_residual())
        self.check(report, 'spectrum.isospectral', 'spec D_Θ = spec D_0', iso_residual, 1e-12)
        self.check(report, 'operator.self_adjoint', 'D* = D', hermitian_residual, 0.0)

        window = TruncationWindow(n=2, radius=self.commutator_radius)
        element_window = TruncationWindow(n=2, radius=self.element_radius)
        a = random_element(element_window, 2.0, seed=self.sub_seed(1), theta=deformed)
        radius = a.support_radius()
        difference = (dirac_commutator(a, window) - derivation_commutator(a, window)).interior_block(radius)
        self.check(report, 'commutator.derivations', '[D, a] = Σ_μ δ_μ(a) γ^μ', float(np.max(np.abs(difference))),
                   1e-12)

        b = random_element(element_window, 2.0, seed=self.sub_seed(2), theta=deformed)
        product = represent(star_product(a, b), window) - represent(a, window) @ represent(b, window)
        homomorphism = product.interior_block(radius + b.support_radius())
        self.check(report, 'represent.homomorphism', 'π(a ⋆ b) = π(a)π(b)', float(np.max(np.abs(homomorphism))),
                   1e-12)

        small = TruncationWindow(n=2, radius=self.element_radius + 2)
        level_one = pi_s(a, 1, small)
        half = level_one.dim // 2
        lower_left = level_one.matrix[half:, :half] - dirac_commutator(a, small).matrix
        self.check(report, 'smooth.level_one', 'π¹(a) = [[π(a), 0], [[D, π(a)], π(a)]]',
                   float(np.max(np.abs(lower_left))), 0.0)
        norms = [seminorm_s(a, s, small, interior_radius=radius) for s in range(3)]
        self.check(report, 'smooth.seminorm_monotone', '‖a‖_s <= ‖a‖_{s+1}',
                   max(0.0, norms[0] - norms[1], norms[1] - norms[2]), 1e-12)
