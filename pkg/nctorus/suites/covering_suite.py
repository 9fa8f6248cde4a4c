from nctorus.algebra import TorusElement, TruncationWindow, identity, make_unitary, random_element, standard_theta, \
    star_product
from nctorus.coverings import (CoveringSpec, averaged_connection, connection_apply, connection_leibniz_residual,
                               deck_action, deck_action_is_free, deck_group, descend, embed, equivariance_check,
                               generator_box, induced_inner, invariant_projection, lifted_connection_residual,
                               lifted_dirac_matrix, lifted_restriction_residual, make_covering, module_decompose,
                               module_inner, module_recompose)
from .base_suite import BaseSuite
from .verification_report import VerificationReport


class CoveringSuite(BaseSuite):
    """
    Finite covering of the 2-torus: embedding, deck action, module structure, connection and lifted Dirac.
    """
    name = 'covering'

    def __init__(self, seed: int = None, tol: float = None, k=(2, 3), theta: float = 0.5, samples: int = 10,
                 window_radius: int = 8) -> None:
        super().__init__(seed, tol)
        self.spec = make_covering(standard_theta(theta), k)
        self.samples = samples
        self.window_radius = window_radius

    def base_element(self, stream: int, radius: int = 2) -> TorusElement:
        return random_element(TruncationWindow(n=2, radius=radius), 2.0, seed=self.sub_seed(stream),
                              theta=self.spec.base_theta)

    def cover_element(self, stream: int, radius: int = 2) -> TorusElement:
        return random_element(TruncationWindow(n=2, radius=radius), 2.0, seed=self.sub_seed(stream),
                              theta=self.spec.cover_theta)

    def execute(self, report: VerificationReport) -> None:
        spec = self.spec
        self.check(report, 'compatibility', 'exp(-2πi θ_rs) = exp(-2πi θ̃_rs k_r k_s)',
                   spec.compatibility_residual(), 1e-13)
        self.check(report, 'deck.free', 'plumbing', 0.0 if deck_action_is_free(spec) else 1.0, 0.0)

        homomorphism, projection, decomposition, equivariance, averaging = 0.0, 0.0, 0.0, 0.0, 0.0
        for i in range(self.samples):
            x, y = self.base_element(2 * i), self.base_element(2 * i + 1)
            homomorphism = max(homomorphism,
                               embed(star_product(x, y), spec).max_distance(star_product(embed(x, spec),
                                                                                         embed(y, spec))))
            a = self.cover_element(1000 + i, radius=3)
            projected = invariant_projection(a, spec)
            projection = max(projection, embed(descend(projected, spec), spec).max_distance(projected),
                             invariant_projection(embed(x, spec), spec).max_distance(embed(x, spec)))
            decomposition = max(decomposition, module_recompose(module_decompose(a, spec), spec).max_distance(a))
            equivariance = max(equivariance, equivariance_check(a, spec))
            averaging = max(averaging, averaged_connection(a, spec).max_distance(connection_apply(a, spec)))
        self.check(report, 'embed.homomorphism', 'u_j ↦ v_j^{k_j}', homomorphism, 1e-13)
        self.check(report, 'projection.image', 'A = Ã^G', projection, 0.0)
        self.check(report, 'module.decomposition', 'Ã = ⊕_j Ũ_j A', decomposition, 1e-13)
        self.check(report, 'connection.equivariance', '∇(g ã) = g(∇ ã)', equivariance, 1e-12)
        self.check(report, 'connection.averaged', '∇ = |G|⁻¹ Σ_g g⁻¹ ∇ g', averaging, 1e-12)

        order = spec.group_order
        orthogonality = 0.0
        box = [(l1, l2) for l1 in range(-2, 3) for l2 in range(-2, 3)]
        for l in box:
            u_l = make_unitary(l, spec.cover_theta)
            for m in box:
                inner = module_inner(u_l, make_unitary(m, spec.cover_theta), spec)
                if l == m:
                    orthogonality = max(orthogonality, inner.max_distance(identity(spec.base_theta).scale(order)))
                elif not all((m_j - l_j) % k_j == 0 for l_j, m_j, k_j in zip(l, m, spec.k)):
                    orthogonality = max(orthogonality, max((abs(v) for v in inner.coeffs.values()), default=0.0))
        self.check(report, 'module.orthogonality', '⟨Ũ_l, Ũ_l⟩ = |G|·1', orthogonality, 1e-13)

        invariance, linearity, positivity = 0.0, 0.0, 0.0
        group = deck_group(spec)
        for i in range(self.samples):
            a, b = self.cover_element(5000 + 2 * i), self.cover_element(5001 + 2 * i)
            x = self.base_element(6000 + i, radius=1)
            inner = module_inner(a, b, spec)
            for g in group:
                moved = module_inner(deck_action(g, a, spec), deck_action(g, b, spec), spec)
                invariance = max(invariance, moved.max_distance(inner))
            linearity = max(linearity, module_inner(a, star_product(b, embed(x, spec)), spec).max_distance(
                star_product(inner, x)))
            norm = order * sum(abs(v) ** 2 for v in a.coeffs.values())
            positivity = max(positivity, abs(induced_inner(a, a, spec) - norm))
        self.check(report, 'module.invariance', '⟨g a, g b⟩ = ⟨a, b⟩', invariance, 1e-13)
        self.check(report, 'module.right_linear', '⟨a, b x⟩ = ⟨a, b⟩ x', linearity, 1e-13)
        self.check(report, 'module.positivity', 'τ⟨a, a⟩ = |G| Σ|â|²', positivity, 1e-13)

        window = TruncationWindow(n=2, radius=self.window_radius)
        pairs = [(self.cover_element(2000 + i), self.base_element(3000 + i, radius=1)) for i in range(2)]
        leibniz = max(connection_leibniz_residual(a, x, spec, window) for a, x in pairs)
        self.check(report, 'connection.leibniz', '∇(ξa) = ∇(ξ)a + ξ[D, a]', leibniz, 1e-12)

        self.check(report, 'lift.restricts', 'D̃ ξ̃_{Kq} = D ξ_q',
                   lifted_restriction_residual(spec, self.window_radius // max(spec.k)), 1e-13)
        self.check(report, 'lift.commutator', '[D̃, ã] = ∇̃(ã)',
                   lifted_connection_residual(self.cover_element(4000), spec, window), 1e-12)


class CoveringSpecSuite(BaseSuite):
    """
    Checks of a user-supplied covering in any dimension: compatibility, deck freeness, module-inner orthogonality
    on the generator box and equivariance of the connection.
    """
    name = 'cover'

    def __init__(self, spec: CoveringSpec, seed: int = None, tol: float = None, radius: int = 2) -> None:
        super().__init__(seed, tol)
        self.spec = spec
        self.radius = radius

    def execute(self, report: VerificationReport) -> None:
        spec = self.spec
        self.check(report, 'compatibility', 'exp(-2πi θ_rs) = exp(-2πi θ̃_rs k_r k_s)',
                   spec.compatibility_residual(), 1e-13)
        self.check(report, 'deck.free', 'plumbing', 0.0 if deck_action_is_free(spec) else 1.0, 0.0)
        order = spec.group_order
        orthogonality = 0.0
        for l in generator_box(spec):
            u_l = make_unitary(l, spec.cover_theta)
            for m in generator_box(spec):
                inner = module_inner(u_l, make_unitary(m, spec.cover_theta), spec)
                target = identity(spec.base_theta).scale(order) if l == m else inner.scale(0)
                orthogonality = max(orthogonality, inner.max_distance(target))
        self.check(report, 'module.orthogonality', '⟨Ũ_l, Ũ_l⟩ = |G|·1', orthogonality, 1e-13)
        a = random_element(TruncationWindow(n=spec.n, radius=self.radius), 2.0, seed=self.sub_seed(0),
                           theta=spec.cover_theta, support_size=min(25, (2 * self.radius + 1) ** spec.n))
        self.check(report, 'connection.equivariance', '∇(g ã) = g(∇ ã)', equivariance_check(a, spec), 1e-12)


class LiftSuite(BaseSuite):
    """
    Lifted Dirac operator of a user-supplied covering against the base operator and the connection.
    """
    name = 'lift'

    def __init__(self, spec: CoveringSpec, seed: int = None, tol: float = None, base_radius: int = 1) -> None:
        super().__init__(seed, tol)
        self.spec = spec
        self.base_radius = base_radius

    def execute(self, report: VerificationReport) -> None:
        spec = self.spec
        self.check(report, 'lift.restricts', 'D̃ ξ̃_{Kq} = D ξ_q', lifted_restriction_residual(spec, self.base_radius),
                   1e-13)
        window = TruncationWindow(n=spec.n, radius=self.base_radius * max(spec.k))
        a = random_element(TruncationWindow(n=spec.n, radius=1), 2.0, seed=self.sub_seed(0), theta=spec.cover_theta)
        self.check(report, 'lift.commutator', '[D̃, ã] = ∇̃(ã)', lifted_connection_residual(a, spec, window), 1e-12)
        self.check(report, 'lift.self_adjoint', 'D̃* = D̃', lifted_dirac_matrix(spec, window).hermiticity_residual(),
                   0.0)
