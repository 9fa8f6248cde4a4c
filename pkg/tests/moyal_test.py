import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st
from nctorus.exceptions import DimensionMismatchError, InvalidParameterError, ThetaMismatchError
from nctorus.moyal import (MoyalMatrix, ladder_act, ladder_set, moyal_partial, moyal_product, norm_pair, random_moyal,
                           seminorm_rk, tensor_combine)

SIZE = 32
seeds = st.integers(min_value=0, max_value=2 ** 31 - 1)


def basis(m, n, size=SIZE):
    return MoyalMatrix.basis(m, n, size)


@pytest.mark.parametrize('m,n,k,l', [(0, 0, 0, 0), (3, 5, 5, 7), (3, 5, 6, 7), (31, 0, 0, 31), (10, 20, 21, 2)])
def test_matrix_unit_products(m, n, k, l):
    product = moyal_product(basis(m, n), basis(k, l)).c
    expected = basis(m, l).c if n == k else np.zeros((SIZE, SIZE))
    np.testing.assert_array_equal(product, expected)


def test_unit_is_identity():
    x = random_moyal(SIZE, seed=1)
    np.testing.assert_array_equal(moyal_product(MoyalMatrix.unit(SIZE), x).c, x.c)


def test_product_compatibility_checks():
    with pytest.raises(ThetaMismatchError):
        moyal_product(MoyalMatrix.unit(4, theta=2.0), MoyalMatrix.unit(4, theta=1.0))
    with pytest.raises(DimensionMismatchError):
        moyal_product(MoyalMatrix.unit(4), MoyalMatrix.unit(5))
    with pytest.raises(InvalidParameterError):
        MoyalMatrix.unit(4, theta=0.0)


def test_ladder_matrices():
    ladder = ladder_set(4)
    np.testing.assert_allclose(np.diag(ladder.A, k=1), np.sqrt([2.0, 4.0, 6.0]))
    np.testing.assert_array_equal(ladder.Abar, ladder.A.T)
    np.testing.assert_array_equal(np.diag(ladder.H), [1, 3, 5, 7])
    np.testing.assert_allclose(ladder.Q, (ladder.A + ladder.Abar) / np.sqrt(2))
    with pytest.raises(InvalidParameterError):
        ladder.operator('x')
    with pytest.raises(InvalidParameterError):
        ladder_set(1)


@pytest.mark.parametrize('m,n', [(1, 1), (5, 7), (20, 3), (30, 30)])
def test_ladder_relations_are_exact(m, n):
    f = basis(m, n)
    np.testing.assert_array_equal(ladder_act(f, 'a').c, np.sqrt(2.0 * m) * basis(m - 1, n).c)
    np.testing.assert_array_equal(ladder_act(f, 'abar').c, np.sqrt(2.0 * (m + 1)) * basis(m + 1, n).c)
    np.testing.assert_array_equal(ladder_act(f, 'a', side='right').c, np.sqrt(2.0 * (n + 1)) * basis(m, n + 1).c)
    np.testing.assert_array_equal(ladder_act(f, 'abar', side='right').c, np.sqrt(2.0 * n) * basis(m, n - 1).c)
    np.testing.assert_array_equal(ladder_act(f, 'H').c, (2 * m + 1) * f.c)
    np.testing.assert_array_equal(ladder_act(f, 'H', side='right').c, (2 * n + 1) * f.c)


def test_ladder_margin_bookkeeping():
    f = basis(2, 2)
    assert ladder_act(f, 'a').margin == 1
    assert ladder_act(f, 'H').margin == 0
    assert ladder_act(ladder_act(f, 'q'), 'p', side='right').margin == 2
    assert ladder_act(f, 'a').interior().shape == (SIZE - 1, SIZE - 1)
    with pytest.raises(InvalidParameterError):
        ladder_act(f, 'a', side='up')


def test_canonical_commutator_on_interior():
    ladder = ladder_set(SIZE)
    commutator = (ladder.A @ ladder.Abar - ladder.Abar @ ladder.A)[:SIZE - 1, :SIZE - 1]
    np.testing.assert_allclose(commutator, 2 * np.eye(SIZE - 1), atol=1e-12)
    position = (ladder.Q @ ladder.P - ladder.P @ ladder.Q)[:SIZE - 1, :SIZE - 1]
    np.testing.assert_allclose(position, 2j * np.eye(SIZE - 1), atol=1e-12)


def test_partial_of_basis_elements():
    dp = moyal_partial(basis(0, 0), 'p')
    assert dp.margin == 1
    ladder = ladder_set(SIZE)
    expected = -1j * (ladder.Q @ basis(0, 0).c - basis(0, 0).c @ ladder.Q)
    np.testing.assert_array_equal(dp.c, expected)
    with pytest.raises(InvalidParameterError):
        moyal_partial(basis(0, 0), 'x')
    with pytest.raises(InvalidParameterError):
        moyal_partial(MoyalMatrix.unit(4, theta=1.0), 'p')


@hyp_settings(max_examples=10, deadline=None)
@given(seed=seeds, axis=st.sampled_from(['p', 'q']))
def test_partial_leibniz(seed, axis):
    x = random_moyal(SIZE, seed=seed, integer=True, bound=1, support=SIZE // 4)
    y = random_moyal(SIZE, seed=seed + 1, integer=True, bound=1, support=SIZE // 4)
    left = moyal_partial(moyal_product(x, y), axis).interior()
    right = moyal_product(moyal_partial(x, axis), y).c + moyal_product(x, moyal_partial(y, axis)).c
    right = right[:left.shape[0], :left.shape[1]]
    assert np.max(np.abs(left - right)) <= 1e-13


@hyp_settings(max_examples=20, deadline=None)
@given(seed=seeds)
def test_trace_is_cyclic_for_gaussian_integers(seed):
    x = random_moyal(SIZE, seed=seed, integer=True)
    y = random_moyal(SIZE, seed=seed + 1, integer=True)
    assert np.trace(moyal_product(x, y).c) == np.trace(moyal_product(y, x).c)


def test_seminorms_of_ground_state():
    f = basis(0, 0)
    assert seminorm_rk(f, 0) == pytest.approx(1.0, abs=1e-14)
    assert seminorm_rk(f, 1) == pytest.approx(1.0, abs=1e-14)
    assert seminorm_rk(basis(1, 2), 1) == pytest.approx(2 * np.sqrt(1.5 * 2.5), abs=1e-13)
    with pytest.raises(InvalidParameterError):
        seminorm_rk(f, -1)


def test_norm_pair():
    frobenius, spectral = norm_pair(random_moyal(SIZE, seed=3))
    assert spectral <= frobenius
    frobenius, spectral = norm_pair(MoyalMatrix.unit(9))
    assert frobenius == pytest.approx(3.0) and spectral == pytest.approx(1.0)


def test_tensor_factors():
    x, y = random_moyal(4, seed=1), random_moyal(4, seed=2)
    combined = tensor_combine([x, y])
    assert combined.N == 2
    np.testing.assert_allclose(combined.materialize(), np.kron(x.c, y.c))
    squared = moyal_product(combined, combined)
    np.testing.assert_allclose(squared.materialize(), np.kron(x.c @ x.c, y.c @ y.c), atol=1e-12)
    assert seminorm_rk(combined, 0) == pytest.approx(seminorm_rk(x, 0) * seminorm_rk(y, 0))
    with pytest.raises(DimensionMismatchError):
        combined.c
    with pytest.raises(DimensionMismatchError):
        tensor_combine([x, random_moyal(5, seed=3)])


def test_random_moyal_determinism():
    np.testing.assert_array_equal(random_moyal(8, seed=5).c, random_moyal(8, seed=5).c)
    integer = random_moyal(8, seed=5, integer=True, bound=2)
    assert np.all(np.abs(integer.c.real) <= 2) and np.all(integer.c.imag == np.round(integer.c.imag))


@hyp_settings(max_examples=20, deadline=None)
@given(seed=seeds)
def test_seminorms_increase_with_level(seed):
    x = random_moyal(SIZE, seed=seed)
    levels = [seminorm_rk(x, k) for k in range(5)]
    assert all(lower <= upper for lower, upper in zip(levels, levels[1:]))


def test_ladder_act_touches_one_tensor_factor():
    x, y = random_moyal(6, seed=1), random_moyal(6, seed=2)
    combined = tensor_combine([x, y])
    for name in ('a', 'abar', 'H'):
        for side in ('left', 'right'):
            acted = ladder_act(combined, name, side, factor=1)
            np.testing.assert_array_equal(acted.factors[0], x.c)
            np.testing.assert_array_equal(acted.factors[1], ladder_act(y, name, side).c)
            np.testing.assert_allclose(acted.materialize(), np.kron(x.c, ladder_act(y, name, side).c))
            assert acted.margin == ladder_act(y, name, side).margin
    with pytest.raises(InvalidParameterError):
        ladder_act(combined, 'a', factor=2)


def test_random_moyal_support():
    x = random_moyal(8, seed=4, integer=True, support=3)
    assert np.all(x.c[3:, :] == 0) and np.all(x.c[:, 3:] == 0)
    with pytest.raises(InvalidParameterError):
        random_moyal(8, seed=4, support=9)
