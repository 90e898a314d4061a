"""Exact and floating spectra of signed graphs, with cospectral constructions.

Set ``SIGNED_SPECTRA_BACKEND=numpy`` to run the hot kernels without numba.
"""

from .construct import (
    Bipartition,
    EquienergeticReport,
    PairFamily,
    cartesian_product,
    complete_graph,
    cycle_graph,
    empty_graph,
    equienergetic_subdivision_check,
    kronecker_product,
    partial_transpose,
    path_graph,
    predicted_sp_spectrum,
    predicted_spk_spectrum,
    random_signed_graph,
    s_p,
    s_p_k,
    subdivision,
    path_pair_family,
    cycle_pair_family,
)
from .errors import SignedGraphError, SizeLimitExceeded
from .graph import (
    SignedGraph,
    balance_potential,
    build_graph,
    is_balanced,
    negate,
    signed_isomorphic,
    switch,
    switching_isomorphic,
    switching_isomorphism,
)
from .linalg import (
    IntPolynomial,
    Orientation,
    RealSpectrum,
    adjacency_matrix,
    adjacency_poly,
    char_poly_exact,
    eigenvalues,
    incidence_matrix,
    laplacian_matrix,
    laplacian_poly,
    rank_exact,
)
from .search import Mode, PairReport, RunConfig, enumerate_signed_graphs, find_cospectral_pairs
from .spectra import (
    SpectralSummary,
    cospectral,
    energy,
    is_integral,
    laplacian_cospectral,
    spectral_summary,
    spectrum_symmetric,
)
from .tu import TUSubgraph, classify_spanning_subgraph, laplacian_charpoly_via_tu
from .verify import VerificationReport, verify_fixtures

__version__ = "0.1.0"
