from itertools import product
from nctorus.algebra import TruncationWindow, random_element, standard_theta
from nctorus.coverings import (DeckElement, compose_embeddings, embed, one_shot_covering, reduce_deck, tower_build,
                               tower_report)
from .base_suite import BaseSuite
from .verification_report import VerificationReport


class TowerSuite(BaseSuite):
    """
    Tower of coverings of the 2-torus with multiplicities m_j = p_1 ... p_j.
    """
    name = 'tower'

    def __init__(self, seed: int = None, tol: float = None, primes=(2, 3, 5), theta: float = 0.3,
                 samples: int = 5) -> None:
        super().__init__(seed, tol)
        self.primes = tuple(primes)
        self.theta = theta
        self.samples = samples

    def execute(self, report: VerificationReport) -> None:
        specs = tower_build(standard_theta(self.theta), self.primes)
        summary = tower_report(specs)
        self.check(report, 'groups.exactness', '|G(m|k)| = |G(m|l)| |G(l|k)|',
                   sum(not ok for *_, ok in summary.exactness), 0.0)

        kernel_mismatch = 0
        moduli = summary.moduli
        for j in range(1, len(moduli)):
            kernel = sum(reduce_deck(DeckElement(residues=g), moduli[j - 1]).is_identity
                         for g in product(range(moduli[j]), repeat=2))
            kernel_mismatch += abs(kernel - summary.kernel_sizes[j - 1])
        self.check(report, 'groups.kernels', 'ker(Z_{m_j}^n -> Z_{m_i}^n)', kernel_mismatch, 0.0)

        one_shot = one_shot_covering(specs)
        window = TruncationWindow(n=2, radius=2)
        embedding = 0.0
        for i in range(self.samples):
            a = random_element(window, 2.0, seed=self.sub_seed(i), theta=specs[0].base_theta)
            embedding = max(embedding, compose_embeddings(a, specs).max_distance(embed(a, one_shot)))
        self.check(report, 'embed.composition', 'C(T_θ) -> C(T_{θ/m_1²}) -> ...', embedding, 0.0)
