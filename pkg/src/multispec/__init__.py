"""Spectra and connectivity of regular multigraphs.

The package builds the extremal multigraph families around the
second-largest-eigenvalue / vertex-connectivity bounds, computes their
adjacency and Laplacian spectra with a Jacobi eigensolver, computes exact
vertex and edge connectivity, and checks the eigenvalue-connectivity
inequalities on constructed and randomly sampled graphs.
"""

from multispec.multigraph import (
    Multigraph,
    degree,
    degrees,
    disjoint_union,
    is_connected,
    is_regular,
    is_underlying_complete,
    multiplicity,
    underlying_simple_graph,
)
from multispec.spectral import (
    Spectrum,
    adjacency_matrix,
    adjacency_spectrum,
    count_positive_eigenvalues,
    eigenvalues_symmetric,
    lambda_i,
    laplacian_matrix,
    laplacian_spectrum,
    mu_i,
)
from multispec.connectivity import (
    ConnectivityReport,
    brute_force_edge_connectivity,
    brute_force_vertex_connectivity,
    connectivity_report,
    edge_connectivity,
    independence_number,
    is_k_connected,
    vertex_connectivity,
)
from multispec.partition import (
    Partition,
    QuotientMatrix,
    check_interlacing,
    is_equitable,
    proof_quotient_lambda2_2part,
    proof_quotient_lambda2_3part,
    quotient_eigenvalues,
    quotient_matrix,
)
from multispec.families import (
    build_B1,
    build_C,
    build_F,
    build_G4,
    build_H,
    build_H1,
    cone,
    expected_spectrum_H,
    random_regular_multigraph,
)
from multispec.theorems import (
    TheoremVerdict,
    c_gap,
    run_campaign,
    theta,
)

__version__ = "0.1.0"
