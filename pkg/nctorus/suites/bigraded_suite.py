import cmath
from nctorus.algebra import (SkewMatrix, TruncationWindow, bigraded_right_star, bigraded_star,
                             gauge_intertwining_residual, random_element)
from .base_suite import BaseSuite
from .verification_report import VerificationReport


class BigradedSuite(BaseSuite):
    """
    Deformed products on the bigraded commutative 2-torus and their gauge equivalence to the star product.
    """
    name = 'bigraded'

    def __init__(self, seed: int = None, tol: float = None, theta: float = 0.3, radius: int = 3,
                 triples: int = 5) -> None:
        super().__init__(seed, tol)
        self.theta = theta
        self.radius = radius
        self.triples = triples

    def execute(self, report: VerificationReport) -> None:
        lam = cmath.exp(2j * cmath.pi * self.theta)
        window = TruncationWindow(n=2, radius=self.radius)
        zero = SkewMatrix.zero(2)
        left, right = 0.0, 0.0
        for i in range(self.triples):
            x, y, z = (random_element(window, 2.0, seed=self.sub_seed(3 * i + j), theta=zero) for j in range(3))
            left = max(left, bigraded_star(bigraded_star(x, y, lam), z, lam).max_distance(
                bigraded_star(x, bigraded_star(y, z, lam), lam)))
            right = max(right, bigraded_right_star(bigraded_right_star(x, y, lam), z, lam).max_distance(
                bigraded_right_star(x, bigraded_right_star(y, z, lam), lam)))
        self.check(report, 'product.associativity', '(x * y) * z = x * (y * z)', left, 1e-13)
        self.check(report, 'right_product.associativity', '(x *_r y) *_r z = x *_r (y *_r z)', right, 1e-13)
        self.check(report, 'gauge.intertwines', 'gauge(x ⋆_Θ y) = gauge(x) * gauge(y)',
                   gauge_intertwining_residual(self.theta, self.radius), 1e-13)
