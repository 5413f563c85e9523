import tracemalloc

import numpy as np
import pytest

from betaproc.errors import DomainError
from betaproc.matproc import BidiagonalMatrix, JacobiMatrix, hermite_init, hermite_step, laguerre_init, \
    laguerre_step, wishart_of
from betaproc.spectral import (
    AtomicMeasure,
    EmpiricalMeasure,
    SpectralMeasure,
    eigen_tridiagonal,
    empirical_eigen_measure,
    fold,
    lanczos_reconstruct,
    matrix_moment,
    singular_value_measure,
    singular_values,
    spectral_measure,
    symmetrized_empirical_measure,
    symmetrized_spectral_measure,
    tridiagonal_eigenvalues,
    wishart_sqrt_measure,
)


def _random_jacobi(seed: int, n: int) -> JacobiMatrix:
    rng = np.random.default_rng(seed)
    return JacobiMatrix(rng.normal(size=n), np.abs(rng.normal(size=n - 1)) + 0.1)


def _random_bidiagonal(seed: int, n: int) -> BidiagonalMatrix:
    rng = np.random.default_rng(seed)
    return BidiagonalMatrix(rng.uniform(0.2, 2.0, size=n), rng.uniform(0.2, 2.0, size=n - 1))


def test_spectral_measure_matches_dense_eigendecomposition():
    J = _random_jacobi(1, 7)
    mu = spectral_measure(J)
    values, vectors = np.linalg.eigh(J.to_dense())
    np.testing.assert_allclose(mu.eigenvalues, values[::-1], atol=1e-12)
    np.testing.assert_allclose(mu.weights, vectors[0, ::-1] ** 2, atol=1e-12)
    assert mu.total_mass == pytest.approx(1.0, abs=1e-14)
    assert np.all(np.diff(mu.points) < 0)


@pytest.mark.parametrize("n", range(2, 9))
def test_first_components_match_dense_eigenvectors(n):
    J = _random_jacobi(10 + n, n)
    values, first = eigen_tridiagonal(J)
    dense_values, vectors = np.linalg.eigh(J.to_dense())
    np.testing.assert_allclose(values, dense_values[::-1], atol=1e-12)
    np.testing.assert_allclose(first, np.abs(vectors[0, ::-1]), atol=1e-10)


def test_first_components_of_a_split_matrix():
    J = JacobiMatrix([0.3, -1.2, 2.0, 0.7, -0.4], [0.8, 0.5, 0.0, 1.1])
    values, first = eigen_tridiagonal(J)
    dense_values, vectors = np.linalg.eigh(J.to_dense())
    np.testing.assert_allclose(values, dense_values[::-1], atol=1e-12)
    np.testing.assert_allclose(first, np.abs(vectors[0, ::-1]), atol=1e-10)
    assert np.count_nonzero(first) == 3


def test_first_components_never_form_the_eigenvector_matrix():
    n = 4000
    J = _random_jacobi(4, n)
    tracemalloc.start()
    try:
        _, first = eigen_tridiagonal(J)
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    assert peak < n * n * 8 / 2
    assert np.sum(first ** 2) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_eigenvalues_interlace_leading_block(seed):
    J = _random_jacobi(seed, 9)
    full = tridiagonal_eigenvalues(J)
    block = tridiagonal_eigenvalues(JacobiMatrix(J.diag[:-1], J.offdiag[:-1]))
    assert np.all(full[:-1] > block)
    assert np.all(block > full[1:])


def test_one_by_one_matrix():
    mu = spectral_measure(JacobiMatrix([2.5], []))
    np.testing.assert_array_equal(mu.points, [2.5])
    np.testing.assert_array_equal(mu.weights, [1.0])
    np.testing.assert_array_equal(tridiagonal_eigenvalues(JacobiMatrix([2.5], [])), [2.5])


def test_tied_eigenvalues_are_separated():
    values, first = eigen_tridiagonal(JacobiMatrix([1.0, 1.0], [0.0]))
    assert values[0] > values[1]
    assert np.sum(first ** 2) == pytest.approx(1.0)


def test_empirical_measure_has_equal_masses():
    nu = empirical_eigen_measure(_random_jacobi(2, 5))
    np.testing.assert_allclose(nu.weights, 0.2)
    with pytest.raises(DomainError):
        EmpiricalMeasure.from_points([])


def test_lanczos_inverts_spectral_measure():
    J = _random_jacobi(3, 8)
    rebuilt = lanczos_reconstruct(spectral_measure(J))
    np.testing.assert_allclose(rebuilt.diag, J.diag, atol=1e-10)
    np.testing.assert_allclose(rebuilt.offdiag, J.offdiag, atol=1e-10)
    with pytest.raises(DomainError):
        lanczos_reconstruct(AtomicMeasure([1.0, 1.0], [0.5, 0.5]))


@pytest.mark.parametrize("seed", range(5))
def test_moment_identity(seed):
    J = _random_jacobi(seed, 6)
    mu = spectral_measure(J)
    for k in range(7):
        assert mu.moment(k) == pytest.approx(matrix_moment(J, k), rel=1e-9, abs=1e-9)
    with pytest.raises(DomainError):
        matrix_moment(J, -1)


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_singular_values_match_dense_svd(n):
    L = _random_bidiagonal(n, n)
    np.testing.assert_allclose(singular_values(L), np.linalg.svd(L.to_dense(), compute_uv=False), atol=1e-10)


def test_symmetrized_measures_are_even():
    L = _random_bidiagonal(4, 5)
    mu = symmetrized_spectral_measure(L)
    assert mu.size == 10
    np.testing.assert_allclose(mu.points, -mu.points[::-1], atol=0)
    np.testing.assert_allclose(mu.weights, mu.weights[::-1], atol=0)
    assert mu.total_mass == pytest.approx(1.0)
    assert mu.moment(1) == pytest.approx(0.0, abs=1e-14)
    nu = symmetrized_empirical_measure(L)
    np.testing.assert_allclose(nu.weights, 0.1)


def test_wishart_sqrt_measure_is_pushforward_of_wishart_measure():
    L = _random_bidiagonal(6, 6)
    root = wishart_sqrt_measure(L)
    wishart = spectral_measure(wishart_of(L))
    np.testing.assert_allclose(root.points ** 2, wishart.points, rtol=1e-10)
    np.testing.assert_allclose(root.weights, wishart.weights, atol=1e-10)
    np.testing.assert_allclose(singular_value_measure(L).points, root.points, atol=1e-12)


def test_fold_merges_mirror_atoms():
    measure = AtomicMeasure([-2.0, -1.0, 1.0, 2.0], [0.1, 0.4, 0.4, 0.1])
    folded = fold(measure)
    np.testing.assert_array_equal(folded.points, [2.0, 1.0])
    np.testing.assert_allclose(folded.weights, [0.2, 0.8])


def test_measure_cdf_and_frames():
    measure = SpectralMeasure([3.0, 1.0, -1.0], [0.2, 0.5, 0.3])
    assert measure.cdf(0.0) == pytest.approx(0.3)
    assert measure.cdf(1.0) == pytest.approx(0.8)
    np.testing.assert_allclose(measure.cdf([-5.0, 5.0]), [0.0, 1.0])
    frame = measure.to_frame()
    assert list(frame.columns) == ["lambda", "weight"]
    restored = SpectralMeasure.from_frame(frame)
    np.testing.assert_array_equal(restored.points, measure.points)
    assert SpectralMeasure.from_dict(measure.to_dict()).weights.tolist() == measure.weights.tolist()
    with pytest.raises(DomainError):
        AtomicMeasure([1.0], [-0.1])


def test_sampled_processes_give_generic_matrices():
    J = hermite_step(hermite_init(30, 1.0, seed=4), 1.0).entries
    assert J.is_generic()
    assert spectral_measure(J).total_mass == pytest.approx(1.0)
    L = laguerre_step(laguerre_init(30, 2.0, 0.0, seed=4), 1.0).entries
    assert symmetrized_spectral_measure(L).total_mass == pytest.approx(1.0)
