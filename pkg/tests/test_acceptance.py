"""End-to-end acceptance checks, one test per criterion, in criterion order.

Run with pytest (a PASS/FAIL line per test is printed in the terminal
summary) or directly as a script.
"""

import itertools
import json
import math
import sys
import time

import numpy as np
import pytest

from signed_spectra import (
    build_graph,
    complete_graph,
    cospectral,
    cycle_graph,
    energy,
    enumerate_signed_graphs,
    is_balanced,
    is_integral,
    negate,
    spectrum_symmetric,
    switch,
    path_pair_family,
    cycle_pair_family,
)
from signed_spectra.construct import (
    cartesian_product,
    equienergetic_subdivision_check,
    is_unbalanced_unicyclic,
    kronecker_product,
    laplacian_spectrum,
    partial_transpose,
    predicted_sp_spectrum,
    predicted_spk_spectrum,
    random_signed_graph,
    s_p,
    s_p_k,
    subdivision,
)
from signed_spectra.graph import SignedGraph, signed_isomorphic
from signed_spectra.linalg import (
    IntPolynomial,
    RealSpectrum,
    adjacency_matrix,
    adjacency_poly,
    char_poly_exact,
    eigenvalues,
    laplacian_matrix,
    laplacian_poly,
    rank_exact,
)
from signed_spectra.search import RunConfig, _atlas, _spanning_forest, find_cospectral_pairs
from signed_spectra.tu import laplacian_charpoly_via_tu

TOL = 1e-9

SEXTIC = IntPolynomial.from_descending([1, -14, 73, -176, 196, -88, 12])
OCTIC_TRANSPOSE_PAIR = IntPolynomial.from_descending([1, -18, 131, -498, 1061, -1256, 764, -200, 16])
OCTIC_EDITED_PAIR = IntPolynomial.from_descending([1, -18, 131, -498, 1065, -1288, 848, -280, 36])
OCTIC_CYCLE = IntPolynomial.from_descending([1, -22, 197, -928, 2476, -3736, 2976, -1056, 128])
OCTIC_CYCLE_RESIGNED = IntPolynomial.from_descending([1, -22, 197, -928, 2476, -3748, 3048, -1152, 128])


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    # compile the numba kernels once so the timed criteria measure steady-state work
    g = path_pair_family(3).gamma1
    laplacian_poly(g)
    laplacian_charpoly_via_tu(g)
    list(enumerate_signed_graphs(3))


def connected_universe(n_max):
    for n in range(1, n_max + 1):
        yield from enumerate_signed_graphs(n, connected_only=True)


def test_01_path_family_order_three_polynomial():
    t0 = time.perf_counter()
    f = path_pair_family(3)
    for g in (f.gamma1, f.gamma1_tau):
        assert char_poly_exact(laplacian_matrix(g)) == SEXTIC
        assert laplacian_charpoly_via_tu(g) == SEXTIC
    assert time.perf_counter() - t0 < 1.0


def test_02_path_family_order_four_polynomials():
    t0 = time.perf_counter()
    f = path_pair_family(4)
    assert laplacian_poly(f.gamma1) == laplacian_poly(f.gamma1_tau) == OCTIC_TRANSPOSE_PAIR
    assert signed_isomorphic(f.gamma1, f.gamma1_tau) is None
    assert signed_isomorphic(f.gamma2, f.gamma3) is None
    p2, p3 = laplacian_poly(f.gamma2), laplacian_poly(f.gamma3)
    assert p2 == p3
    assert time.perf_counter() - t0 < 1.0
    assert p2 == OCTIC_EDITED_PAIR, f"computed {p2}"


def unsigned(g: SignedGraph) -> SignedGraph:
    return build_graph(g.n, [(u, v, 1) for u, v, _ in g.edges])


def test_03_cycle_family_equal_determinant_unequal_spectrum():
    t0 = time.perf_counter()
    f = cycle_pair_family(4, 1, 3)
    p1, pp = laplacian_poly(f.gamma1), laplacian_poly(f.gamma_prime)
    assert p1 == OCTIC_CYCLE and pp == OCTIC_CYCLE_RESIGNED
    assert p1.coefficient(0) == pp.coefficient(0) == 128
    assert p1 != pp
    assert laplacian_poly(f.gamma1_tau) == p1
    ua, ub = unsigned(f.gamma1), unsigned(f.gamma1_tau)
    assert signed_isomorphic(ua, ub) is None
    assert adjacency_poly(ua) != adjacency_poly(ub)
    assert time.perf_counter() - t0 < 1.0


def test_04_sp_spectrum_prediction_sweep():
    t0 = time.perf_counter()
    count = 0
    for g in connected_universe(5):
        lap = laplacian_spectrum(g)
        for p in (1, 2, 3):
            got = eigenvalues(adjacency_matrix(s_p(g, p)), TOL)
            want = predicted_sp_spectrum(lap, g.n, g.m, p, is_balanced(g), TOL)
            assert got.matches(want, TOL), (g, p)
            count += 1
    assert count == 3 * (1 + 1 + 3 + 12 + 79)
    assert time.perf_counter() - t0 < 60.0


def test_05_spk_spectrum_prediction_sweep():
    t0 = time.perf_counter()
    for g in connected_universe(5):
        lap = laplacian_spectrum(g)
        for p, k in ((1, 1), (1, 0), (2, 1), (2, 2)):
            got = eigenvalues(adjacency_matrix(s_p_k(g, p, k)), TOL)
            want = predicted_spk_spectrum(lap, g.n, g.m, p, k, is_balanced(g), TOL)
            assert got.matches(want, TOL), (g, p, k)
    assert time.perf_counter() - t0 < 120.0


def test_06_sp_prediction_from_printed_laplacian_data():
    r5 = math.sqrt(5)
    got = predicted_sp_spectrum([0, 2, 3, 3, 3 + r5, 3 - r5], n=6, m=7, p=2, balanced=True)
    r6, r20 = math.sqrt(6), math.sqrt(20)
    printed = [0.0] * 10 + [2, -2] + [r6, -r6] * 2
    printed += [s * math.sqrt(6 + t * r20) for s in (1, -1) for t in (1, -1)]
    assert got.matches(RealSpectrum.from_values(printed), TOL)
    assert got.order == 20


def every_sign_class(n):
    # every underlying graph, with one sign pattern per switching class (forest edges positive)
    for edges in _atlas(n):
        _, _, _, nontree = _spanning_forest(n, edges)
        for c in range(1 << len(nontree)):
            signs = [1] * len(edges)
            for b, j in enumerate(nontree.tolist()):
                if (c >> b) & 1:
                    signs[j] = -1
            yield build_graph(n, [(u, v, s) for (u, v), s in zip(edges, signs)])


def test_07_subgraph_expansion_matches_determinant():
    t0 = time.perf_counter()
    checked = 0
    for n in range(6):
        for g in every_sign_class(n):
            assert laplacian_charpoly_via_tu(g) == char_poly_exact(laplacian_matrix(g)), g
            checked += 1
    rng = np.random.default_rng(2024)
    for t in range(200):
        g = random_signed_graph(6 + t % 2, rng, density=float(rng.uniform(0.2, 0.8)))
        assert laplacian_charpoly_via_tu(g) == char_poly_exact(laplacian_matrix(g)), g
    assert checked > 100
    assert time.perf_counter() - t0 < 90.0


def test_08_energy_scaling():
    rng = np.random.default_rng(8)
    for _ in range(50):
        g = random_signed_graph(int(rng.integers(2, 7)), rng, density=0.5, connected=True)
        base = energy(subdivision(g))
        for p in (2, 3, 4):
            assert abs(energy(s_p(g, p)) - math.sqrt(p) * base) < TOL
        for p, k in ((1, 1), (2, 1)):
            factor = math.sqrt((p + 1) * (k + 1))
            assert abs(energy(s_p_k(g, p, k)) - factor * base) < TOL


def direct_energies(g):
    # eigensolve the product matrices built straight from A(S(g)), independent of the graph products
    a = adjacency_matrix(subdivision(g)).astype(float)
    k2 = np.array([[0.0, 1.0], [1.0, 0.0]])
    cart = np.kron(a, np.eye(2)) + np.kron(np.eye(len(a)), k2)
    kron = np.kron(a, k2)
    return tuple(float(np.abs(np.linalg.eigvalsh(m)).sum()) for m in (cart, kron))


def test_09_equienergetic_subdivision_products():
    c3 = cycle_graph(3, -1)
    k2 = complete_graph(2)
    cart, kron = cartesian_product(subdivision(c3), k2), kronecker_product(subdivision(c3), k2)
    assert adjacency_poly(cart) != adjacency_poly(kron)
    assert abs(energy(cart) - 16.0) < TOL and abs(energy(kron) - 16.0) < TOL

    seen = 0
    for n in range(3, 7):
        for g in enumerate_signed_graphs(n, connected_only=True):
            if not is_unbalanced_unicyclic(g):
                continue
            rep = equienergetic_subdivision_check(g, TOL)
            e_cart, e_kron = direct_energies(g)
            assert abs(rep.energy_cartesian - e_cart) < TOL and abs(rep.energy_kronecker - e_kron) < TOL
            assert rep.noncospectral
            assert (abs(e_cart - e_kron) < TOL) == rep.equienergetic
            assert rep.consistent, g
            seen += 1
    assert seen > 10


def exact_multiplicity(a: np.ndarray, lam: int) -> int:
    return len(a) - rank_exact(a - lam * np.eye(len(a), dtype=np.int64))


def test_10_integral_multi_subdivision():
    k4 = complete_graph(4)
    g4 = s_p(k4, 4)
    assert is_integral(g4)
    assert adjacency_poly(g4) == IntPolynomial.from_roots([0] * 22 + [4, -4] * 3)
    a = adjacency_matrix(g4)
    assert [exact_multiplicity(a, lam) for lam in (0, 4, -4)] == [22, 3, 3]
    assert not is_integral(s_p(k4, 2))


def test_11_symmetric_spectrum_iff_cospectral_with_negation():
    for n in range(5):
        pairs = list(itertools.combinations(range(n), 2))
        for choice in itertools.product((0, 1, -1), repeat=len(pairs)):
            g = build_graph(n, [(u, v, s) for (u, v), s in zip(pairs, choice) if s])
            assert spectrum_symmetric(g) == cospectral(g, negate(g)), g


def test_12_switching_and_transpose_invariants():
    rng = np.random.default_rng(12)
    for _ in range(100):
        g = random_signed_graph(int(rng.integers(1, 10)), rng, density=float(rng.random()))
        X = [v for v in range(g.n) if rng.random() < 0.5]
        h = switch(g, X)
        assert adjacency_poly(h) == adjacency_poly(g)
        assert laplacian_poly(h) == laplacian_poly(g)
    for _ in range(100):
        n = 2 * int(rng.integers(1, 6))
        g = random_signed_graph(n, rng, density=float(rng.random()))
        assert sum(partial_transpose(g).degrees) == sum(g.degrees)


def test_13_search_determinism_and_cospectral_pipeline():
    def search_bytes(threads):
        reps = find_cospectral_pairs(5, "lap", config=RunConfig(thread_count=threads))
        return "\n".join(json.dumps(r.to_json_obj()) for r in reps).encode()

    outs = {search_bytes(t) for t in (1, 2, 4)}
    assert len(outs) == 1

    f = path_pair_family(4)
    a, b = s_p(f.gamma1, 2), s_p(f.gamma1_tau, 2)
    assert adjacency_poly(a) == adjacency_poly(b)
    assert signed_isomorphic(a, b) is None


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
