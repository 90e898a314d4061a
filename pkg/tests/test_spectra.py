import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from signed_spectra import (
    build_graph,
    complete_graph,
    cospectral,
    cycle_graph,
    energy,
    is_integral,
    laplacian_cospectral,
    negate,
    path_graph,
    s_p,
    spectral_summary,
    spectrum_symmetric,
    subdivision,
    switch,
    path_pair_family,
    cycle_pair_family,
)
from signed_spectra.linalg import IntPolynomial, laplacian_poly
from signed_spectra.spectra import integer_roots

from .conftest import all_labelled_signed_graphs, signed_graphs


def test_cospectral_examples(c3neg):
    assert cospectral(c3neg, c3neg)
    assert cospectral(c3neg, switch(c3neg, {1}))
    assert not cospectral(c3neg, cycle_graph(3, 1))


def test_laplacian_cospectral_examples():
    f = path_pair_family(4)
    assert laplacian_cospectral(f.gamma1, f.gamma1_tau)
    assert laplacian_cospectral(f.gamma2, f.gamma3)
    h = cycle_pair_family(4, 1, 3)
    assert not laplacian_cospectral(h.gamma1, h.gamma_prime)


def test_determinant_does_not_fix_spectrum():
    h = cycle_pair_family(4, 1, 3)
    a, b = laplacian_poly(h.gamma1), laplacian_poly(h.gamma_prime)
    assert a.coefficient(0) == b.coefficient(0) == 128
    assert a != b


def test_energy_examples(c3neg):
    assert energy(c3neg) == pytest.approx(4.0, abs=1e-12)
    assert energy(build_graph(5)) == 0.0
    assert energy(subdivision(c3neg)) == pytest.approx(8.0, abs=1e-12)


def test_integral_examples(c3neg):
    assert is_integral(c3neg)
    assert not is_integral(path_graph(3))
    assert is_integral(s_p(complete_graph(4), 4))


def test_symmetric_examples(c3neg):
    assert spectrum_symmetric(subdivision(c3neg))
    assert not spectrum_symmetric(cycle_graph(3, 1))
    assert spectrum_symmetric(build_graph(4))


@given(signed_graphs(max_n=7))
def test_subdivision_spectrum_symmetric(g):
    assert spectrum_symmetric(subdivision(g))


def test_symmetric_iff_cospectral_with_negation_exhaustive():
    for n in range(5):
        for g in all_labelled_signed_graphs(n):
            assert spectrum_symmetric(g) == cospectral(g, negate(g)), g


@given(signed_graphs(max_n=7))
def test_symmetric_spectrum_energy(g):
    if spectrum_symmetric(g):
        assert energy(g) == pytest.approx(energy(negate(g)), abs=1e-9)


@given(signed_graphs(max_n=7), signed_graphs(max_n=7))
def test_laplacian_cospectral_implies_equal_determinant(a, b):
    if laplacian_cospectral(a, b):
        assert laplacian_poly(a).coefficient(0) == laplacian_poly(b).coefficient(0)


@settings(max_examples=50)
@given(st.lists(st.integers(-6, 6), max_size=7), st.lists(st.integers(-3, 3), max_size=3))
def test_integer_roots_oracle(roots, quad):
    # append an irreducible-or-not quadratic x^2 + c to mix in non-integer roots
    p = IntPolynomial.from_roots(roots)
    for c in quad:
        p = IntPolynomial(np.convolve(p.coeffs, [c, 0, 1]).tolist())
    x = sympy.symbols("x")
    sp = sympy.Poly(list(reversed(p.coeffs)), x)
    all_int = sum(m for r, m in sympy.roots(sp).items() if r.is_integer) == p.degree
    got = integer_roots(p)
    assert (got is not None) == all_int
    if got is not None:
        assert IntPolynomial.from_roots(got) == p


def test_integer_roots_needs_monic():
    with pytest.raises(ValueError):
        integer_roots(IntPolynomial([1, 2]))


def test_near_integer_irrational_roots():
    # x^2 - 2*10^6 x + (10^12 - 1) has roots 10^6 +- 1, integer
    assert integer_roots(IntPolynomial([10**12 - 1, -2 * 10**6, 1])) == [10**6 + 1, 10**6 - 1]
    # roots 10^6 +- sqrt(2): near integers, not integers
    assert integer_roots(IntPolynomial([10**12 - 2, -2 * 10**6, 1])) is None


@given(signed_graphs(max_n=7))
def test_summary_invariants(g):
    s = spectral_summary(g)
    assert s.adjacency_poly.degree == g.n == s.laplacian_poly.degree
    total = math.fsum(m * abs(v) for v, m in s.adjacency_spec.values)
    assert s.energy == pytest.approx(total, abs=1e-9)
    assert spectral_summary(g) is s
