from nctorus.algebra import SkewMatrix, TruncationWindow, random_element, standard_theta, star_product
from nctorus.coverings import invariant_projection, make_covering
from nctorus.oracles import brute_group_average, dense_star_oracle, sample_and_multiply
from .base_suite import BaseSuite
from .verification_report import VerificationReport


class OracleSuite(BaseSuite):
    """
    Optimized kernels against their brute-force references.
    """
    name = 'oracle'

    def __init__(self, seed: int = None, tol: float = None, pairs: int = 100, radius: int = 3,
                 grid_radius: int = 4, grid_size: int = 32) -> None:
        super().__init__(seed, tol)
        self.pairs = pairs
        self.radius = radius
        self.grid_radius = grid_radius
        self.grid_size = grid_size

    def execute(self, report: VerificationReport) -> None:
        theta = standard_theta(0.3)
        window = TruncationWindow(n=2, radius=self.radius)
        star_residual = 0.0
        for i in range(self.pairs):
            a = random_element(window, 2.0, seed=self.sub_seed(2 * i), theta=theta)
            b = random_element(window, 2.0, seed=self.sub_seed(2 * i + 1), theta=theta)
            star_residual = max(star_residual, star_product(a, b).max_distance(dense_star_oracle(a, b)))
        self.check(report, 'star.dense_oracle', 'Σ_{r+s=p} â(r) b̂(s) exp(-πi r·Θs)', star_residual, 1e-13)

        zero = SkewMatrix.zero(2)
        grid_window = TruncationWindow(n=2, radius=self.grid_radius)
        a = random_element(grid_window, 2.0, seed=self.sub_seed(10_001), theta=zero)
        b = random_element(grid_window, 2.0, seed=self.sub_seed(10_002), theta=zero)
        grid_residual = sample_and_multiply(a, b, self.grid_size).max_distance(star_product(a, b))
        self.check(report, 'star.grid_oracle', 'f̂(p) = ∫ exp(-2πi x·p) f(x) dx', grid_residual, 1e-10)

        spec = make_covering(standard_theta(0.5), (2, 3))
        cover_window = TruncationWindow(n=2, radius=self.radius)
        average_residual = 0.0
        for i in range(self.pairs):
            a = random_element(cover_window, 2.0, seed=self.sub_seed(20_000 + i), theta=spec.cover_theta)
            average_residual = max(average_residual,
                                   invariant_projection(a, spec).max_distance(brute_group_average(a, spec)))
        self.check(report, 'cover.group_average_oracle', 'A = Ã^G', average_residual, 1e-13)
