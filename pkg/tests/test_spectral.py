import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from multispec.families import build_B1, build_F, build_G4, build_H, build_H1, random_regular_multigraph
from multispec.multigraph import Multigraph, complete_graph, disjoint_union, is_underlying_complete
from multispec.spectral import (
    ConvergenceError,
    adjacency_matrix,
    adjacency_spectrum,
    count_positive_eigenvalues,
    eigenvalues_symmetric,
    lambda_i,
    laplacian_matrix,
    laplacian_spectrum,
    mu_i,
)
from oracles import eigenvalues_by_bisection
from strategies import multigraphs

TOL = 1e-8


def close(xs, ys, tol=TOL):
    return len(xs) == len(ys) and all(abs(a - b) <= tol for a, b in zip(xs, ys))


def test_adjacency_matrix_examples():
    d = 8
    expected = np.array([
        [0, 3 * d / 4, d / 4, 0, 0],
        [3 * d / 4, 0, d / 4, 0, 0],
        [d / 4, d / 4, 0, d / 4, d / 4],
        [0, 0, d / 4, 0, 3 * d / 4],
        [0, 0, d / 4, 3 * d / 4, 0],
    ])
    assert np.array_equal(adjacency_matrix(build_H1(d)), expected)
    assert np.array_equal(adjacency_matrix(Multigraph(3)), np.zeros((3, 3)))
    assert adjacency_matrix(build_B1(4)).tolist() == [[0, 3, 1], [3, 0, 1], [1, 1, 0]]


def test_laplacian_matrix_examples():
    assert laplacian_matrix(build_B1(4)).tolist() == [[4, -3, -1], [-3, 4, -1], [-1, -1, 2]]
    assert np.array_equal(laplacian_matrix(Multigraph(4)), np.zeros((4, 4)))


@settings(max_examples=100, deadline=None)
@given(multigraphs())
def test_laplacian_rows_sum_to_zero(G):
    assert np.all(laplacian_matrix(G).sum(axis=1) == 0)


def test_eigensolver_examples():
    assert eigenvalues_symmetric(np.diag([3.0, 1.0, 2.0])).values == (3.0, 2.0, 1.0)
    assert close(adjacency_spectrum(build_H1(4)).values, [4, 3, -1, -3, -3])
    assert close(adjacency_spectrum(build_G4(8)).values, [8, 0, 0, -2, -2, -4])


def test_eigensolver_rejects_bad_input():
    with pytest.raises(ValueError):
        eigenvalues_symmetric(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        eigenvalues_symmetric(np.eye(2), tol=0)
    with pytest.raises(ValueError):
        eigenvalues_symmetric(np.ones((2, 3)))


def test_eigensolver_handles_empty_and_scalar():
    assert eigenvalues_symmetric(np.zeros((0, 0))).values == ()
    assert eigenvalues_symmetric(np.array([[-2.5]])).values == (-2.5,)


def test_eigensolver_is_deterministic():
    rng = np.random.default_rng(3)
    M = rng.normal(size=(9, 9))
    M = M + M.T
    assert eigenvalues_symmetric(M).values == eigenvalues_symmetric(M.copy()).values


def test_eigensolver_order_64_converges():
    rng = np.random.default_rng(11)
    M = rng.integers(-5, 6, size=(64, 64)).astype(float)
    M = M + M.T
    vals = eigenvalues_symmetric(M).values
    scale = np.linalg.norm(M)
    assert abs(sum(vals) - np.trace(M)) < 64 * 1e-10 * scale
    # cross-check with LAPACK as a sanity bound only
    assert np.allclose(vals, np.linalg.eigvalsh(M)[::-1], atol=1e-9 * scale)


def test_convergence_error_is_a_runtime_error():
    assert issubclass(ConvergenceError, RuntimeError)


def test_eigensolver_matches_charpoly_bisection_oracle():
    rnd = random.Random(20240601)
    for _ in range(60):
        n = rnd.randint(1, 6)
        M = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                M[i][j] = M[j][i] = Fraction(rnd.randint(-40, 40), rnd.choice([1, 2, 5, 10]))
        expected = eigenvalues_by_bisection(M)
        got = eigenvalues_symmetric(np.array(M, dtype=float)).values
        assert close(got, expected, 1e-7), (M, got, expected)


def test_oracle_handles_repeated_roots():
    # H_{4,1} has -3 twice
    A = adjacency_matrix(build_H1(4)).astype(int).tolist()
    assert close(eigenvalues_by_bisection(A), [4, 3, -1, -3, -3], 1e-9)


def test_lambda_i_examples():
    H = build_H(12, 3)
    assert abs(lambda_i(H, 2)) < TOL
    assert abs(lambda_i(H, 1) - 12) < TOL
    d = 4
    two = disjoint_union(complete_graph(5), complete_graph(5))
    assert abs(lambda_i(two, 2) - d) < TOL
    with pytest.raises(IndexError):
        lambda_i(H, 0)
    with pytest.raises(IndexError):
        lambda_i(H, 6)


def test_mu_i_examples():
    assert abs(mu_i(build_H1(4), 1)) < TOL
    assert abs(mu_i(build_F(3), 2) - (9 - math.sqrt(17)) / 2) < TOL
    assert abs(mu_i(build_H(12, 3), 2) - 12) < TOL
    with pytest.raises(IndexError):
        mu_i(build_F(3), 5)


def test_count_positive_examples():
    assert count_positive_eigenvalues(complete_graph(3)) == 1
    assert count_positive_eigenvalues(build_G4(12)) == 2
    assert count_positive_eigenvalues(Multigraph(4)) == 0
    assert count_positive_eigenvalues(build_H(12, 3)) == 1


def test_grouped_spectrum_for_display():
    groups = adjacency_spectrum(build_G4(12)).grouped()
    assert [k for _, k in groups] == [1, 1, 1, 2, 1]
    assert close([v for v, _ in groups], [12, 2, 0, -4, -6])


@pytest.mark.parametrize("n,d,seed", [(6, 4, 1), (8, 3, 2), (10, 6, 3), (12, 10, 4)])
def test_regular_adjacency_laplacian_relation(n, d, seed):
    G = random_regular_multigraph(n, d, seed)
    for i in range(1, n + 1):
        assert abs(lambda_i(G, i) - (d - mu_i(G, i))) < TOL


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=8, max_mult=5))
def test_spectrum_invariants(G):
    A = adjacency_spectrum(G)
    L = laplacian_spectrum(G)
    assert list(A.values) == sorted(A.values, reverse=True)
    assert len(A) == len(L) == G.n
    assert abs(sum(A.values)) < TOL
    assert abs(sum(L.values) - 2 * G.edge_count) < G.n * 1e-10 * max(1.0, L.norm)
    assert abs(L.values[-1]) < 1e-9 * max(1.0, L.norm)
    assert np.linalg.norm(laplacian_matrix(G) @ np.ones(G.n)) < 1e-9 * max(1.0, L.norm)
    if G.n >= 2 and not is_underlying_complete(G):
        assert A.values[1] >= -TOL
