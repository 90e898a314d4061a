"""Both kernel backends against each other and against slow references."""

import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from signed_spectra import build_graph, switch
from signed_spectra._kernels import ENV_FLAG, available_backends, backend_name, get_backend
from signed_spectra.graph import switching_isomorphic
from signed_spectra.linalg import _primes
from signed_spectra.search import _spanning_forest

P = _primes(1)[0]


def test_primes_are_prime_and_large():
    ps = _primes(4)
    assert all(sympy.isprime(p) for p in ps)
    assert ps == sorted(ps, reverse=True) and ps[0] < 2**31


@pytest.mark.parametrize("kernels", available_backends())
@settings(max_examples=40, deadline=None)
@given(a=st.integers(1, 8).flatmap(lambda n: arrays(np.int64, (n, n), elements=st.integers(0, P - 1))))
def test_charpoly_mod_p_matches_sympy(a, kernels):
    x = sympy.symbols("x")
    want = sympy.Poly(sympy.Matrix(a.tolist()).charpoly(x).as_expr(), x, modulus=P)
    got = get_backend(kernels).charpoly_mod_p(a, P)
    want_low = [int(c) % P for c in reversed(want.all_coeffs())]
    want_low += [0] * (len(got) - len(want_low))
    assert [int(c) for c in got] == want_low


def test_backends_agree_on_charpoly():
    rng = np.random.default_rng(5)
    a = rng.integers(0, P, size=(25, 25))
    outs = [get_backend(b).charpoly_mod_p(a, P) for b in available_backends()]
    for o in outs[1:]:
        assert np.array_equal(o, outs[0])


def _edge_arrays(g):
    return (
        np.array([u for u, _, _ in g.edges], dtype=np.int64),
        np.array([v for _, v, _ in g.edges], dtype=np.int64),
        np.array([s for _, _, s in g.edges], dtype=np.int64),
    )


@pytest.mark.parametrize("seed", range(5))
def test_backends_agree_on_tu(seed):
    rng = np.random.default_rng(seed)
    n = 7
    pairs = list(itertools.combinations(range(n), 2))
    g = build_graph(n, [(u, v, int(rng.choice((1, -1)))) for u, v in pairs if rng.random() < 0.6])
    outs = [get_backend(b).tu_weight_sums(n, *_edge_arrays(g)) for b in available_backends()]
    for o in outs[1:]:
        assert np.array_equal(o, outs[0])


def _class_index(kernels, g):
    edges = g.underlying_edges()
    parent, child, tree_edge, nontree = _spanning_forest(g.n, edges)
    bits = np.array([[1 if s < 0 else 0 for _, _, s in g.edges]], dtype=np.int8)
    eu, ev, _ = _edge_arrays(g)
    return int(get_backend(kernels).switch_class_index(
        bits, eu, ev, parent, child, tree_edge, nontree, g.n)[0])


@pytest.mark.parametrize("kernels", available_backends())
def test_switch_class_index_is_a_switching_invariant(kernels):
    rng = np.random.default_rng(2)
    n = 6
    base = build_graph(n, [(u, v, 1) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.7])
    seen = {}
    for _ in range(200):
        signs = rng.choice((1, -1), size=base.m)
        g = base.with_signs([int(s) for s in signs])
        X = [v for v in range(n) if rng.random() < 0.5]
        c = _class_index(kernels, g)
        assert _class_index(kernels, switch(g, X)) == c
        if c in seen:
            assert switching_isomorphic(seen[c], g)
        seen[c] = g


def test_backends_agree_on_switch_class_index():
    rng = np.random.default_rng(9)
    n = 7
    edges = tuple(itertools.combinations(range(n), 2))
    parent, child, tree_edge, nontree = _spanning_forest(n, edges)
    bits = rng.integers(0, 2, size=(4096, len(edges))).astype(np.int8)
    eu = np.array([u for u, _ in edges], dtype=np.int64)
    ev = np.array([v for _, v in edges], dtype=np.int64)
    outs = [
        get_backend(b).switch_class_index(bits, eu, ev, parent, child, tree_edge, nontree, n)
        for b in available_backends()
    ]
    for o in outs[1:]:
        assert np.array_equal(o, outs[0])
    assert outs[0].min() >= 0 and outs[0].max() < 2 ** len(nontree)


def test_env_flag_selects_backend(monkeypatch):
    monkeypatch.setenv(ENV_FLAG, "numpy")
    assert backend_name() == "numpy"
    monkeypatch.setenv(ENV_FLAG, "numba")
    assert backend_name() == ("numba" if "numba" in available_backends() else "numpy")
    with pytest.raises(ValueError):
        get_backend("fortran")
