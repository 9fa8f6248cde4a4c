import warnings
import numpy as np
import pytest
from nctorus.algebra import (SkewMatrix, TruncationWindow, identity, make_unitary, random_element, standard_theta,
                             star_product)
from nctorus.dirac import (TruncatedOperator, derivation_commutator, dirac_commutator, dirac_matrix, dirac_spectrum,
                           gamma_set, pi_s, represent, seminorm_s, spinor_dimension)
from nctorus.exceptions import DimensionMismatchError, InvalidParameterError

THETA = standard_theta(0.3)


@pytest.mark.parametrize('n', range(1, 7))
def test_clifford_relations(n):
    gammas = gamma_set(n)
    assert gammas.m == spinor_dimension(n) == 2 ** (n // 2)
    assert len(gammas.matrices) == n
    assert gammas.clifford_residual() <= 1e-14
    assert gammas.hermiticity_residual() <= 1e-14


def test_gamma_small_cases():
    assert np.array_equal(gamma_set(1)[1], np.eye(1))
    two = gamma_set(2)
    assert np.array_equal(two[1], np.array([[0, 1], [1, 0]]))
    assert np.array_equal(two[2], np.array([[0, -1j], [1j, 0]]))
    with pytest.raises(InvalidParameterError):
        gamma_set(0)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_slash_squares_to_norm(n):
    gammas = gamma_set(n)
    k = np.arange(1, n + 1, dtype=float)
    slashed = gammas.slash(k)
    np.testing.assert_allclose(slashed @ slashed, np.dot(k, k) * np.eye(gammas.m), atol=1e-13)


def test_represent_identity_and_unitary():
    window = TruncationWindow(n=2, radius=2)
    assert np.array_equal(represent(identity(THETA), window).matrix, np.eye(window.size))
    shift = represent(make_unitary((1, 0), THETA), window).matrix
    source = window.index_of((0, 1))
    target = window.index_of((1, 1))
    assert shift[target, source] == pytest.approx(np.exp(-1j * np.pi * 0.3), abs=1e-15)
    with pytest.raises(DimensionMismatchError):
        represent(make_unitary((1, 0, 0), SkewMatrix.zero(3)), window)


@pytest.mark.parametrize('theta', [THETA, SkewMatrix.from_upper(3, {(0, 1): 0.2, (0, 2): -0.7, (1, 2): 0.4})],
                         ids=['n2', 'n3'])
def test_represent_is_homomorphism_on_interior(theta):
    window = TruncationWindow(n=theta.n, radius=4 if theta.n == 3 else 7)
    element_window = TruncationWindow(n=theta.n, radius=1 if theta.n == 3 else 2)
    a = random_element(element_window, 2.0, seed=11, theta=theta)
    b = random_element(element_window, 2.0, seed=12, theta=theta)
    product = represent(star_product(a, b), window) - represent(a, window) @ represent(b, window)
    block = product.interior_block(a.support_radius() + b.support_radius())
    assert block.size > 0
    assert np.max(np.abs(block)) <= 1e-12


def test_dirac_unit_window_spectrum():
    report = dirac_spectrum(SkewMatrix.zero(2), TruncationWindow(n=2, radius=1))
    expected = sorted([0.0] * 2 + [1.0, -1.0] * 4 + [np.sqrt(2), -np.sqrt(2)] * 4)
    assert len(report.eigenvalues) == 18
    np.testing.assert_allclose(report.eigenvalues, expected, atol=1e-12)
    counts = report.multiplicities()
    assert list(counts.values()) == [4, 4, 2, 4, 4]


@pytest.mark.parametrize('radius', range(1, 5))
def test_dirac_isospectral(radius):
    window = TruncationWindow(n=2, radius=radius)
    plain = dirac_spectrum(SkewMatrix.zero(2), window)
    deformed = dirac_spectrum(THETA, window)
    np.testing.assert_allclose(plain.eigenvalues, deformed.eigenvalues, atol=1e-12, rtol=0)


def test_dirac_is_self_adjoint():
    operator = dirac_matrix(SkewMatrix.from_upper(3, {(0, 1): 0.2, (1, 2): 0.4}), TruncationWindow(n=3, radius=2))
    assert operator.hermiticity_residual() == 0.0
    assert operator.dim == 125 * 2


def test_commutator_of_unitary():
    window = TruncationWindow(n=2, radius=4)
    u = make_unitary((2, -1), THETA)
    difference = (dirac_commutator(u, window) - derivation_commutator(u, window)).matrix
    assert np.max(np.abs(difference)) <= 1e-12


def test_commutator_identity_on_interior():
    window = TruncationWindow(n=2, radius=8)
    a = random_element(TruncationWindow(n=2, radius=2), 2.0, seed=5, theta=THETA)
    difference = (dirac_commutator(a, window) - derivation_commutator(a, window)).interior_block(a.support_radius())
    assert difference.size > 0
    assert np.max(np.abs(difference)) <= 1e-12


def test_interior_block_empty_warns():
    operator = represent(identity(THETA), TruncationWindow(n=2, radius=1))
    with pytest.warns(UserWarning):
        block = operator.interior_block(2)
    assert block.shape == (9, 0)


def test_truncated_operator_shape_check():
    with pytest.raises(DimensionMismatchError):
        TruncatedOperator(window=TruncationWindow(n=2, radius=1), spinor_dim=2, matrix=np.eye(9))


def test_pi_s_structure():
    window = TruncationWindow(n=2, radius=3)
    a = random_element(TruncationWindow(n=2, radius=1), 2.0, seed=11, theta=THETA)
    assert pi_s(a, 0, window).dim == window.size
    level_one = pi_s(a, 1, window)
    assert level_one.copies == 2 and level_one.dim == 2 * window.size * 2
    half = level_one.dim // 2
    np.testing.assert_array_equal(level_one.matrix[half:, :half], dirac_commutator(a, window).matrix)
    np.testing.assert_array_equal(level_one.matrix[:half, half:], 0)
    level_two = pi_s(a, 2, window)
    assert level_two.dim == 4 * window.size * 2
    np.testing.assert_array_equal(level_two.matrix[:level_two.dim // 2, :level_two.dim // 2], level_one.matrix)
    with pytest.raises(InvalidParameterError):
        pi_s(a, -1, window)


def test_seminorms():
    window = TruncationWindow(n=2, radius=4)
    one = identity(THETA)
    assert seminorm_s(one, 0, window) == pytest.approx(1.0, abs=1e-12)
    assert seminorm_s(one, 2, window) == pytest.approx(1.0, abs=1e-12)
    a = random_element(TruncationWindow(n=2, radius=1), 2.0, seed=3, theta=THETA)
    norms = [seminorm_s(a, s, window, interior_radius=1) for s in range(3)]
    assert norms[0] <= norms[1] + 1e-12 <= norms[2] + 2e-12


def test_seminorm_empty_interior_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        value = seminorm_s(identity(THETA), 0, TruncationWindow(n=2, radius=1), interior_radius=3)
    assert value == 0.0
    assert any(issubclass(w.category, UserWarning) for w in caught)
