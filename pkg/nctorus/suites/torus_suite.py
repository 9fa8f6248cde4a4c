import cmath
from itertools import product
from typing import List
from nctorus.algebra import (SkewMatrix, TorusElement, TruncationWindow, delta, generator, gns_inner, identity,
                             involution, make_unitary, random_element, star_product, trace)
from .base_suite import BaseSuite
from .verification_report import VerificationReport


class TorusSuite(BaseSuite):
    """
    Algebraic identities of the star product, the involution, the trace and the derivations.
    """
    name = 'torus'

    def __init__(self, seed: int = None, tol: float = None, dims=(2, 3, 4), radius: int = 3, triples: int = 12,
                 support_size: int = 12, decay: float = 2.0) -> None:
        """
        :param dims: torus dimensions to sample.
        :param radius: support radius of the random elements.
        :param triples: random triples (a, b, c) per dimension.
        :param support_size: number of support points of every random element.
        :param decay: decay exponent of the random coefficients.
        """
        super().__init__(seed, tol)
        self.dims = tuple(dims)
        self.radius = radius
        self.triples = triples
        self.support_size = support_size
        self.decay = decay

    def random_theta(self, n: int) -> SkewMatrix:
        rng = self.rng(100 + n)
        upper = {(j, k): float(rng.uniform(-1, 1)) for j in range(n) for k in range(j + 1, n)}
        return SkewMatrix.from_upper(n, upper)

    def elements(self, n: int, theta: SkewMatrix) -> List[TorusElement]:
        window = TruncationWindow(n=n, radius=self.radius)
        return [random_element(window, self.decay, seed=self.sub_seed(1000 * n + i), theta=theta,
                               support_size=self.support_size) for i in range(3 * self.triples)]

    def execute(self, report: VerificationReport) -> None:
        residuals = {key: 0.0 for key in ('associativity', 'unit', 'commutation', 'anti_homomorphism',
                                          'involutive', 'tracial', 'leibniz', 'integration_by_parts',
                                          'parseval', 'orthonormal_basis')}
        for n in self.dims:
            theta = self.random_theta(n)
            elements = self.elements(n, theta)
            one = identity(theta)
            for i in range(self.triples):
                a, b, c = elements[3 * i:3 * i + 3]
                ab = star_product(a, b)
                ba = star_product(b, a)
                residuals['associativity'] = max(residuals['associativity'],
                                                 star_product(ab, c).max_distance(star_product(a, star_product(b, c))))
                residuals['unit'] = max(residuals['unit'], star_product(one, a).max_distance(a),
                                        star_product(a, one).max_distance(a))
                residuals['anti_homomorphism'] = max(residuals['anti_homomorphism'], involution(ab).max_distance(
                    star_product(involution(b), involution(a))))
                residuals['involutive'] = max(residuals['involutive'], involution(involution(a)).max_distance(a))
                residuals['tracial'] = max(residuals['tracial'], abs(trace(ab) - trace(ba)))
                residuals['parseval'] = max(residuals['parseval'], abs(gns_inner(a, a) - a.l2_norm_squared()))
                for mu in range(1, n + 1):
                    leibniz = star_product(delta(a, mu), b) + star_product(a, delta(b, mu))
                    residuals['leibniz'] = max(residuals['leibniz'], delta(ab, mu).max_distance(leibniz))
                    residuals['integration_by_parts'] = max(
                        residuals['integration_by_parts'],
                        abs(trace(star_product(a, delta(b, mu))) + trace(star_product(delta(a, mu), b))))
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    u_j, u_k = generator(j, theta), generator(k, theta)
                    phase = cmath.exp(-2j * cmath.pi * theta.entries[j - 1][k - 1])
                    residuals['commutation'] = max(residuals['commutation'], star_product(u_j, u_k).max_distance(
                        star_product(u_k, u_j).scale(phase)))
            axis = range(-1, 2)
            basis = [make_unitary(k, theta) for k in product(axis, repeat=n)]
            for u in basis:
                for v in basis:
                    expected = 1.0 if u.coeffs.keys() == v.coeffs.keys() else 0.0
                    residuals['orthonormal_basis'] = max(residuals['orthonormal_basis'],
                                                         abs(gns_inner(u, v) - expected))

        self.check(report, 'star.associativity', '(a ⋆ b) ⋆ c = a ⋆ (b ⋆ c)', residuals['associativity'])
        self.check(report, 'star.unit', '1 ⋆ a = a ⋆ 1 = a', residuals['unit'], 0.0)
        self.check(report, 'star.commutation', 'u_j u_k = exp(-2πi θ_jk) u_k u_j', residuals['commutation'], 1e-13)
        self.check(report, 'involution.anti_homomorphism', '(a ⋆ b)* = b* ⋆ a*', residuals['anti_homomorphism'],
                   1e-13)
        self.check(report, 'involution.involutive', 'a** = a', residuals['involutive'], 0.0)
        self.check(report, 'trace.tracial', 'τ(a ⋆ b) = τ(b ⋆ a)', residuals['tracial'], 1e-13)
        self.check(report, 'delta.leibniz', 'δ_μ(a ⋆ b) = δ_μ(a) ⋆ b + a ⋆ δ_μ(b)', residuals['leibniz'], 1e-13)
        self.check(report, 'delta.integration_by_parts', 'τ(a ⋆ δ_μ b) = -τ(δ_μ a ⋆ b)',
                   residuals['integration_by_parts'], 1e-13)
        self.check(report, 'gns.parseval', 'τ(a* ⋆ a) = Σ |â(p)|²', residuals['parseval'], 1e-13)
        self.check(report, 'gns.orthonormal_basis', '(ξ_k, ξ_l) = δ_kl', residuals['orthonormal_basis'], 1e-13)
