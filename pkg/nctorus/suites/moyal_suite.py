import numpy as np
from nctorus.moyal import (MoyalMatrix, ladder_act, ladder_set, moyal_partial, moyal_product, norm_pair, random_moyal,
                           seminorm_rk)
from .base_suite import BaseSuite
from .verification_report import VerificationReport


class MoyalSuite(BaseSuite):
    """
    Matrix calculus of the Moyal plane at θ = 2 in the f_mn basis.
    """
    name = 'moyal'

    def __init__(self, seed: int = None, tol: float = None, size: int = 32, stride: int = 4,
                 support: int = None) -> None:
        """
        :param size: truncation M.
        :param stride: step of the sampled index grid of the matrix-unit product table.
        :param support: populated leading block of the random Leibniz operands, size // 4 when None.
        """
        super().__init__(seed, tol)
        self.size = size
        self.stride = stride
        self.support = max(1, size // 4) if support is None else support

    def execute(self, report: VerificationReport) -> None:
        size = self.size
        indices = range(0, size, self.stride)
        table = 0.0
        for m in indices:
            for n in indices:
                for k in indices:
                    for l in indices:
                        product = moyal_product(MoyalMatrix.basis(m, n, size), MoyalMatrix.basis(k, l, size)).c
                        expected = MoyalMatrix.basis(m, l, size).c * (n == k)
                        table = max(table, float(np.max(np.abs(product - expected))))
        self.check(report, 'basis.product_table', 'f_mn f_kl = δ_nk f_ml', table, 0.0)

        self.check(report, 'ladder.relations', 'a × f_mn = √(2m) f_{m-1,n}', self.ladder_residual(), 0.0)

        ladder = ladder_set(size)
        commutator = (ladder.A @ ladder.Abar - ladder.Abar @ ladder.A)[:size - 1, :size - 1]
        self.check(report, 'ladder.canonical', 'a ā - ā a = 2', float(np.max(np.abs(commutator - 2 * np.eye(size - 1)))),
                   1e-12)

        x = random_moyal(size, seed=self.sub_seed(1), integer=True, bound=1, support=self.support)
        y = random_moyal(size, seed=self.sub_seed(2), integer=True, bound=1, support=self.support)
        xy = moyal_product(x, y)
        leibniz = 0.0
        for axis in ('p', 'q'):
            left = moyal_partial(xy, axis).interior()
            right = (moyal_product(moyal_partial(x, axis), y).c + moyal_product(x, moyal_partial(y, axis)).c)
            right = right[:left.shape[0], :left.shape[1]]
            leibniz = max(leibniz, float(np.max(np.abs(left - right))))
        self.check(report, 'partial.leibniz', '∂_j(f × g) = ∂_j f × g + f × ∂_j g', leibniz, 1e-13)

        trace_residual = abs(np.trace(xy.c) - np.trace(moyal_product(y, x).c))
        self.check(report, 'trace.cyclic', 'tr(xy) = tr(yx)', float(trace_residual), 0.0)

        unit = MoyalMatrix.basis(0, 0, size)
        self.check(report, 'seminorm.r0', 'r_0(f_00) = 1', abs(seminorm_rk(unit, 0) - 1.0), 1e-14)
        self.check(report, 'seminorm.r1', 'r_1(f_00) = 1 at θ = 2', abs(seminorm_rk(unit, 1) - 1.0), 1e-14)
        levels = [seminorm_rk(x, k) for k in range(4)]
        self.check(report, 'seminorm.ladder', 'r_k <= r_{k+1} at θ = 2',
                   max(0.0, *(lower - upper for lower, upper in zip(levels, levels[1:]))), 0.0)
        frobenius, spectral = norm_pair(random_moyal(size, seed=self.sub_seed(3)))
        self.check(report, 'norm.spectral_below_frobenius', '‖c‖_op <= ‖c‖_2', max(0.0, spectral - frobenius), 0.0)

    def ladder_residual(self) -> float:
        """
        The four ladder relations and both Hamiltonian actions on every interior f_mn.
        """
        size = self.size
        residual = 0.0
        for m in range(1, size - 1):
            for n in range(1, size - 1):
                f = MoyalMatrix.basis(m, n, size)
                expected = {
                    ('a', 'left'): np.sqrt(2.0 * m) * MoyalMatrix.basis(m - 1, n, size).c,
                    ('abar', 'left'): np.sqrt(2.0 * (m + 1)) * MoyalMatrix.basis(m + 1, n, size).c,
                    ('a', 'right'): np.sqrt(2.0 * (n + 1)) * MoyalMatrix.basis(m, n + 1, size).c,
                    ('abar', 'right'): np.sqrt(2.0 * n) * MoyalMatrix.basis(m, n - 1, size).c,
                    ('H', 'left'): (2 * m + 1) * f.c,
                    ('H', 'right'): (2 * n + 1) * f.c,
                }
                for (name, side), target in expected.items():
                    residual = max(residual, float(np.max(np.abs(ladder_act(f, name, side).c - target))))
        return residual
