"""Adjacency/Laplacian spectra via a cyclic Jacobi eigensolver."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from multispec.multigraph import Multigraph, degrees

DEFAULT_TOL = 1e-10
GROUP_TOL = 1e-6
POSITIVE_TOL = 1e-8
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order."""

    values: tuple[float, ...]
    tol: float = DEFAULT_TOL
    norm: float = 0.0

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def ascending(self) -> tuple[float, ...]:
        return self.values[::-1]

    def grouped(self, rel_tol: float = GROUP_TOL) -> list[tuple[float, int]]:
        """Merge runs of values closer than ``rel_tol * max(1, norm)``.

        Each group is reported by its mean. Display only.
        """
        eps = rel_tol * max(1.0, self.norm)
        groups: list[list[float]] = []
        for x in self.values:
            if groups and groups[-1][-1] - x <= eps:
                groups[-1].append(x)
            else:
                groups.append([x])
        return [(math.fsum(g) / len(g), len(g)) for g in groups]


def adjacency_matrix(G: Multigraph) -> np.ndarray:
    A = np.zeros((G.n, G.n))
    for (u, v), m in G.mult.items():
        A[u, v] = A[v, u] = m
    return A


def laplacian_matrix(G: Multigraph) -> np.ndarray:
    L = -adjacency_matrix(G)
    L[np.diag_indices(G.n)] = degrees(G)
    return L


def _check_symmetric(M: np.ndarray) -> np.ndarray:
    M = np.array(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.array_equal(M, M.T):
        raise ValueError("matrix is not symmetric")
    return M


def eigenvalues_symmetric(M, tol: float = DEFAULT_TOL) -> Spectrum:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps over the strict upper triangle in row order, annihilating each
    off-diagonal entry with a plane rotation, until the off-diagonal
    Frobenius norm drops below ``tol * max(1, ||M||_F) / 100``.  By Weyl's
    inequality every returned eigenvalue is then within
    ``tol * max(1, ||M||_F)`` of the true one.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = _check_symmetric(M)
    n = A.shape[0]
    norm = float(np.linalg.norm(A))
    scale = max(1.0, norm)
    target = max(tol * 1e-2, 8 * np.finfo(float).eps) * scale

    off_mask = ~np.eye(n, dtype=bool)

    def off_norm():
        return float(np.linalg.norm(A[off_mask]))

    sweeps = 0
    while off_norm() > target:
        if sweeps == MAX_SWEEPS:
            raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                diff = A[q, q] - A[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    # rotation angle below double precision; theta**2 would overflow
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
    vals = sorted((float(x) for x in np.diag(A)), reverse=True)
    return Spectrum(tuple(vals), tol, norm)


@lru_cache(maxsize=512)
def adjacency_spectrum(G: Multigraph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigenvalues_symmetric(adjacency_matrix(G), tol)


@lru_cache(maxsize=512)
def laplacian_spectrum(G: Multigraph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigenvalues_symmetric(laplacian_matrix(G), tol)


def _check_index(G: Multigraph, i: int) -> None:
    if not 1 <= i <= G.n:
        raise IndexError(f"eigenvalue index {i} out of range 1..{G.n}")


def lambda_i(G: Multigraph, i: int) -> float:
    """i-th largest adjacency eigenvalue (1-based)."""
    _check_index(G, i)
    return adjacency_spectrum(G)[i - 1]


def mu_i(G: Multigraph, i: int) -> float:
    """i-th smallest Laplacian eigenvalue (1-based)."""
    _check_index(G, i)
    return laplacian_spectrum(G)[G.n - i]


def count_positive_eigenvalues(G: Multigraph, tol: float = POSITIVE_TOL) -> int:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return sum(1 for x in adjacency_spectrum(G) if x > tol)
