import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st
from nctorus.algebra import SkewMatrix, TruncationWindow, identity, make_unitary, random_element, standard_theta, \
    star_product
from nctorus.coverings import (CoveringSpec, DeckElement, character_phase, deck_action, deck_action_is_free,
                               deck_compose, deck_group, deck_inverse, descend, embed, generator_box, induced_inner,
                               invariant_projection, make_covering, module_decompose, module_inner, module_recompose)
from nctorus.exceptions import ConsistencyError, DimensionMismatchError, InvalidParameterError, SizeCapError, \
    ThetaMismatchError
from nctorus.global_settings import settings

SPEC = make_covering(standard_theta(0.5), (2, 3))
seeds = st.integers(min_value=0, max_value=2 ** 31 - 1)


def base_element(seed, radius=2):
    return random_element(TruncationWindow(n=2, radius=radius), 2.0, seed=seed, theta=SPEC.base_theta)


def cover_element(seed, radius=3):
    return random_element(TruncationWindow(n=2, radius=radius), 2.0, seed=seed, theta=SPEC.cover_theta)


def test_make_covering_scales_theta():
    assert SPEC.cover_theta.entries[0][1] == 0.5 / 6
    assert SPEC.group_order == 6
    assert SPEC.compatibility_residual() <= 1e-13


def test_covering_spec_validation():
    with pytest.raises(InvalidParameterError):
        make_covering(standard_theta(0.5), (0, 3))
    with pytest.raises(DimensionMismatchError):
        make_covering(standard_theta(0.5), (2, 3, 1))
    with pytest.raises(InvalidParameterError):
        CoveringSpec(k=(2, 3), base_theta=standard_theta(0.5), cover_theta=standard_theta(0.5))


def test_covering_accepts_equivalent_angles():
    shifted = SkewMatrix.from_upper(2, {(0, 1): 0.5 / 6 + 1 / 6})
    spec = CoveringSpec(k=(2, 3), base_theta=standard_theta(0.5), cover_theta=shifted)
    assert spec.compatibility_residual() <= 1e-13


def test_deck_group_structure():
    group = deck_group(SPEC)
    assert len(group) == 6
    assert group[0].is_identity
    g, h = DeckElement(residues=(1, 2)), DeckElement(residues=(1, 2))
    assert deck_compose(g, h, SPEC) == DeckElement(residues=(0, 1))
    assert deck_compose(g, deck_inverse(g, SPEC), SPEC).is_identity
    assert deck_action_is_free(SPEC)


def test_deck_group_cap():
    settings.deck_group_cap = 5
    with pytest.raises(SizeCapError):
        deck_group(SPEC)


def test_deck_action_on_generators():
    v1 = make_unitary((1, 0), SPEC.cover_theta)
    moved = deck_action(DeckElement(residues=(1, 0)), v1, SPEC)
    assert moved.coefficient((1, 0)) == pytest.approx(-1.0, abs=1e-15)
    assert deck_action(DeckElement(residues=(1, 1)), make_unitary((2, 3), SPEC.cover_theta), SPEC) == \
        make_unitary((2, 3), SPEC.cover_theta)
    assert character_phase(DeckElement(residues=(1, 2)), (4, -6), SPEC.k) == 1.0


@hyp_settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_deck_action_is_automorphism(seed):
    a, b = cover_element(seed), cover_element(seed + 1)
    for g in deck_group(SPEC):
        left = deck_action(g, star_product(a, b), SPEC)
        right = star_product(deck_action(g, a, SPEC), deck_action(g, b, SPEC))
        assert left.max_distance(right) <= 1e-13


@hyp_settings(max_examples=20, deadline=None)
@given(seed=seeds)
def test_embedding_is_homomorphism(seed):
    x, y = base_element(seed), base_element(seed + 1)
    left = embed(star_product(x, y), SPEC)
    right = star_product(embed(x, SPEC), embed(y, SPEC))
    assert left.max_distance(right) <= 1e-13


def test_embed_generators_and_identity():
    assert embed(make_unitary((1, 0), SPEC.base_theta), SPEC) == make_unitary((2, 0), SPEC.cover_theta)
    assert embed(make_unitary((0, 1), SPEC.base_theta), SPEC) == make_unitary((0, 3), SPEC.cover_theta)
    assert embed(identity(SPEC.base_theta), SPEC) == identity(SPEC.cover_theta)
    with pytest.raises(ThetaMismatchError):
        embed(make_unitary((1, 0), SPEC.cover_theta), SPEC)


@hyp_settings(max_examples=20, deadline=None)
@given(seed=seeds)
def test_invariant_projection_image_is_embedded_algebra(seed):
    a = cover_element(seed)
    projected = invariant_projection(a, SPEC)
    assert embed(descend(projected, SPEC), SPEC) == projected
    assert invariant_projection(projected, SPEC) == projected
    x = base_element(seed)
    assert invariant_projection(embed(x, SPEC), SPEC) == embed(x, SPEC)


def test_descend_rejects_non_invariant():
    with pytest.raises(ConsistencyError):
        descend(make_unitary((1, 0), SPEC.cover_theta), SPEC)


def test_invariant_projection_kills_moving_modes():
    assert invariant_projection(make_unitary((1, 0), SPEC.cover_theta), SPEC).is_zero
    trivial = make_covering(standard_theta(0.5), (1, 1))
    a = random_element(TruncationWindow(n=2, radius=2), 2.0, seed=4, theta=trivial.cover_theta)
    assert invariant_projection(a, trivial) == a


def test_module_inner_orthogonality():
    for l in generator_box(SPEC):
        u_l = make_unitary(l, SPEC.cover_theta)
        assert module_inner(u_l, u_l, SPEC).max_distance(identity(SPEC.base_theta).scale(6)) <= 1e-13
        for m in generator_box(SPEC):
            if m != l:
                assert module_inner(u_l, make_unitary(m, SPEC.cover_theta), SPEC).is_zero


def test_module_inner_descends_to_base():
    inner = module_inner(make_unitary((0, 0), SPEC.cover_theta), make_unitary((2, 3), SPEC.cover_theta), SPEC)
    assert inner.theta == SPEC.base_theta
    assert list(inner.coeffs) == [(1, 1)]
    assert abs(inner.coefficient((1, 1))) == pytest.approx(6.0, abs=1e-13)


def test_induced_inner_product():
    u = make_unitary((1, 2), SPEC.cover_theta)
    assert induced_inner(u, u, SPEC) == pytest.approx(6.0, abs=1e-13)
    assert induced_inner(u, make_unitary((1, 1), SPEC.cover_theta), SPEC) == 0


@hyp_settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_module_inner_is_deck_invariant(seed):
    a, b = cover_element(seed, radius=2), cover_element(seed + 1, radius=2)
    inner = module_inner(a, b, SPEC)
    for g in deck_group(SPEC):
        moved = module_inner(deck_action(g, a, SPEC), deck_action(g, b, SPEC), SPEC)
        assert moved.max_distance(inner) <= 1e-13


@hyp_settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_module_inner_is_right_linear(seed):
    a, b = cover_element(seed, radius=2), cover_element(seed + 1, radius=2)
    x = base_element(seed + 2, radius=1)
    left = module_inner(a, star_product(b, embed(x, SPEC)), SPEC)
    assert left.max_distance(star_product(module_inner(a, b, SPEC), x)) <= 1e-13


@hyp_settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_induced_inner_is_positive(seed):
    a = cover_element(seed)
    norm = SPEC.group_order * sum(abs(v) ** 2 for v in a.coeffs.values())
    assert induced_inner(a, a, SPEC) == pytest.approx(norm, abs=1e-13)


@hyp_settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_module_decomposition(seed):
    a = cover_element(seed)
    parts = module_decompose(a, SPEC)
    assert set(parts) == set(generator_box(SPEC))
    assert all(part.theta == SPEC.base_theta for part in parts.values())
    assert module_recompose(parts, SPEC).max_distance(a) <= 1e-13
