"""Vertex partitions, quotient matrices and eigenvalue interlacing."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from multispec.multigraph import Multigraph
from multispec.spectral import DEFAULT_TOL, Spectrum, eigenvalues_symmetric

INTERLACE_TOL = 1e-8


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in blocks))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the ``"0,1|2,3,4"`` form."""
        try:
            return cls([int(x) for x in part.split(",")] for part in text.split("|"))
        except ValueError as exc:
            raise ValueError(f"bad partition syntax {text!r}") from exc

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("partition has an empty block")
            for v in b:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range for n={n}")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            raise ValueError(f"partition misses vertices {sorted(set(range(n)) - seen)}")

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return "|".join(",".join(map(str, b)) for b in self.blocks)


@dataclass(frozen=True)
class QuotientMatrix:
    """Block-averaged edge counts ``b[i][j]`` with the block sizes."""

    entries: np.ndarray
    block_sizes: tuple[float, ...]

    @property
    def order(self) -> int:
        return len(self.block_sizes)

    def symmetrized(self) -> np.ndarray:
        """``D^(1/2) B D^(-1/2)`` with ``D = diag(block sizes)``.

        Symmetric because ``b[i][j] |V_i| = b[j][i] |V_j|``; the two halves are
        averaged so rounding in the scaling cannot break exact symmetry.
        """
        root = np.sqrt(np.asarray(self.block_sizes, dtype=float))
        S = self.entries * root[:, None] / root[None, :]
        scale = max(1.0, float(np.abs(S).max()) if S.size else 1.0)
        if not np.allclose(S, S.T, rtol=0, atol=1e-9 * scale):
            raise ValueError("quotient entries violate b_ij |V_i| = b_ji |V_j|")
        return (S + S.T) / 2


def _edge_counts(G: Multigraph, P: Partition) -> np.ndarray:
    """e[i][j]: edge endpoints from block i into block j, with multiplicity."""
    where = {}
    for i, block in enumerate(P.blocks):
        for v in block:
            where[v] = i
    e = np.zeros((len(P), len(P)), dtype=np.int64)
    for (u, v), m in G.mult.items():
        e[where[u], where[v]] += m
        e[where[v], where[u]] += m
    return e


def quotient_matrix(G: Multigraph, P: Partition) -> QuotientMatrix:
    P.validate(G.n)
    sizes = np.array([len(b) for b in P.blocks], dtype=float)
    B = _edge_counts(G, P) / sizes[:, None]
    return QuotientMatrix(B, tuple(len(b) for b in P.blocks))


def quotient_eigenvalues(Q: QuotientMatrix, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigenvalues_symmetric(Q.symmetrized(), tol)


def is_equitable(G: Multigraph, P: Partition) -> bool:
    """Every vertex of block i sends the same multiplicity total into block j."""
    P.validate(G.n)
    adj = G.adjacency_lists()
    where = {v: i for i, b in enumerate(P.blocks) for v in b}
    for block in P.blocks:
        profiles = set()
        for v in block:
            row = [0] * len(P)
            for w, m in adj[v].items():
                row[where[w]] += m
            profiles.add(tuple(row))
            if len(profiles) > 1:
                return False
    return True


def check_interlacing(outer, inner, tol: float = INTERLACE_TOL) -> bool:
    """Two-sided Cauchy interlacing of ``inner`` (order m) inside ``outer`` (order n).

    Both arguments are sorted non-increasing. Requires, for i = 1..m,
    ``outer_i >= inner_i >= outer_{i+n-m}`` up to ``tol``.
    """
    outer = list(outer)
    inner = list(inner)
    n, m = len(outer), len(inner)
    if m > n:
        raise ValueError(f"inner spectrum ({m}) longer than outer ({n})")
    return all(
        outer[i] >= inner[i] - tol and inner[i] >= outer[i + n - m] - tol for i in range(m)
    )


def principal_submatrix(M, keep) -> np.ndarray:
    keep = list(keep)
    return np.asarray(M)[np.ix_(keep, keep)]


def _check_blocks(*sizes) -> None:
    if any(s < 1 for s in sizes):
        raise ValueError("block sizes must be at least 1")


def proof_quotient_2part(d, n1, n2, m1) -> QuotientMatrix:
    """Quotient for the split {component G1} | {rest of G, cut vertex included}."""
    _check_blocks(n1, n2)
    a, b = m1 / n1, m1 / (n2 + 1)
    return QuotientMatrix(np.array([[d - a, a], [b, d - b]], dtype=float), (n1, n2 + 1))


def proof_quotient_3part(d, n1, n2, m1, m2) -> QuotientMatrix:
    """Quotient for the split {G1} | {cut vertex} | {G2}."""
    _check_blocks(n1, n2)
    return QuotientMatrix(
        np.array(
            [
                [d - m1 / n1, m1 / n1, 0.0],
                [m1, 0.0, m2],
                [0.0, m2 / n2, d - m2 / n2],
            ],
            dtype=float,
        ),
        (n1, 1, n2),
    )


def proof_quotient_lambda2_2part(d, n1, n2, m1) -> float:
    """Second eigenvalue of the two-part quotient: d - m1/n1 - m1/(n2+1)."""
    _check_blocks(n1, n2)
    return d - m1 / n1 - m1 / (n2 + 1)


def proof_quotient_lambda2_3part(d, n1, n2, m1, m2) -> float:
    """Second eigenvalue of the three-part quotient, closed form.

    The cubic factors as (x - d) times a quadratic in (x - d); this is the
    larger root of that quadratic.
    """
    _check_blocks(n1, n2)
    s = m1 / n1 + m2 / n2 + d
    disc = s * s - 4 * m1 * m2 * (n1 + n2 + 1) / (n1 * n2)
    if disc < 0:
        raise ValueError(f"negative discriminant {disc} for d={d}, n1={n1}, n2={n2}, m1={m1}, m2={m2}")
    return (2 * d - s + math.sqrt(disc)) / 2


def quotient_charpoly(Q: QuotientMatrix) -> list[float]:
    """Monic characteristic polynomial coefficients of an order <= 3 matrix, highest first."""
    B = np.asarray(Q.entries, dtype=float)
    s = B.shape[0]
    if s == 1:
        return [1.0, -B[0, 0]]
    if s == 2:
        return [1.0, -np.trace(B), float(np.linalg.det(B))]
    if s == 3:
        minors = (
            B[0, 0] * B[1, 1] - B[0, 1] * B[1, 0]
            + B[0, 0] * B[2, 2] - B[0, 2] * B[2, 0]
            + B[1, 1] * B[2, 2] - B[1, 2] * B[2, 1]
        )
        det = (
            B[0, 0] * (B[1, 1] * B[2, 2] - B[1, 2] * B[2, 1])
            - B[0, 1] * (B[1, 0] * B[2, 2] - B[1, 2] * B[2, 0])
            + B[0, 2] * (B[1, 0] * B[2, 1] - B[1, 1] * B[2, 0])
        )
        return [1.0, -float(np.trace(B)), float(minors), -float(det)]
    raise ValueError("explicit characteristic polynomial only for order <= 3")


def exact_quotient_entries(G: Multigraph, P: Partition) -> list[list[Fraction]]:
    P.validate(G.n)
    e = _edge_counts(G, P)
    return [[Fraction(int(e[i, j]), len(P.blocks[i])) for j in range(len(P))] for i in range(len(P))]
