"""Laplacian characteristic polynomial from TU-subgraphs.

A TU-subgraph is a spanning edge subset whose components are trees or
unicyclic graphs with a negative cycle. Its weight is ``4**q`` times the
product of the tree orders (isolated vertices are trees of order 1). The
coefficient of ``x**(n-i)`` in ``det(xI - L)`` is ``(-1)**i`` times the total
weight of TU-subgraphs with ``i`` edges.

This is an independent route to the Laplacian polynomial; it shares no code
with :func:`signed_spectra.linalg.char_poly_exact`.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from ._kernels import get_backend
from .errors import IndexOutOfRange, SizeLimitExceeded
from .graph import SignedGraph, balance_potential
from .linalg import IntPolynomial

#: Largest edge count accepted by the enumeration.
MAX_TU_EDGES = 24
_INT64_SAFE_BITS = 62


class ComponentClass(Enum):
    TREE = "tree"
    UNBALANCED_UNICYCLIC = "unbalanced_unicyclic"


@dataclass(frozen=True)
class TUSubgraph:
    edge_subset: tuple[int, ...]
    components: tuple[tuple[frozenset[int], ComponentClass], ...]
    q: int
    weight: int


def classify_spanning_subgraph(g: SignedGraph, edge_subset: Iterable[int]) -> TUSubgraph | None:
    """Classify the spanning subgraph on ``edge_subset``; None if not TU."""
    subset = tuple(sorted(set(int(j) for j in edge_subset)))
    for j in subset:
        if not 0 <= j < g.m:
            raise IndexOutOfRange(f"edge index {j} outside 0..{g.m - 1}")
    sub = SignedGraph(g.n, tuple(g.edges[j] for j in subset))
    comps = []
    q = 0
    weight = 1
    for comp in sub.components:
        cs = set(comp)
        n_edges = sum(1 for u, _, _ in sub.edges if u in cs)
        if n_edges == len(comp) - 1:
            comps.append((frozenset(comp), ComponentClass.TREE))
            weight *= len(comp)
        elif n_edges == len(comp):
            local = {v: i for i, v in enumerate(comp)}
            piece = SignedGraph(
                len(comp),
                tuple(sorted((local[u], local[v], s) for u, v, s in sub.edges if u in cs)),
            )
            if balance_potential(piece) is not None:
                return None
            comps.append((frozenset(comp), ComponentClass.UNBALANCED_UNICYCLIC))
            q += 1
            weight *= 4
        else:
            return None
    return TUSubgraph(subset, tuple(comps), q, weight)


def _check_size(g: SignedGraph) -> None:
    if g.m > MAX_TU_EDGES:
        raise SizeLimitExceeded(f"TU enumeration limited to m <= {MAX_TU_EDGES}, got {g.m}")
    # every weight sum is a Laplacian coefficient, at most C(n,i) * (2 maxdeg)**i
    lam = 2 * max(g.degrees, default=0)
    worst = max((math.comb(g.n, i) * lam**i for i in range(g.n + 1)), default=1)
    if worst.bit_length() > _INT64_SAFE_BITS:
        raise SizeLimitExceeded("TU weight sums could overflow 64-bit accumulators")


def tu_weight_sums(g: SignedGraph, backend: str | None = None) -> list[int]:
    """Entry ``i``: total weight of TU-subgraphs with ``i`` edges (``0..n``)."""
    _check_size(g)
    if g.n == 0:
        return [1]
    eu = np.array([u for u, _, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v, _ in g.edges], dtype=np.int64)
    es = np.array([s for _, _, s in g.edges], dtype=np.int64)
    sums = get_backend(backend).tu_weight_sums(g.n, eu, ev, es)
    return [int(x) for x in sums]


def tu_weight_sums_reference(g: SignedGraph) -> list[int]:
    """Slow pure-Python enumeration through :func:`classify_spanning_subgraph`."""
    _check_size(g)
    out = [0] * (g.n + 1)
    out[0] = 1
    for i in range(1, min(g.n, g.m) + 1):
        for subset in combinations(range(g.m), i):
            h = classify_spanning_subgraph(g, subset)
            if h is not None:
                out[i] += h.weight
    return out


def laplacian_charpoly_via_tu(g: SignedGraph, backend: str | None = None) -> IntPolynomial:
    w = tu_weight_sums(g, backend)
    n = g.n
    coeffs = [0] * (n + 1)
    for i, total in enumerate(w):
        coeffs[n - i] = (-1) ** i * total
    return IntPolynomial(coeffs)


def comparable(g1: SignedGraph, g2: SignedGraph) -> bool:
    """True when the TU weight sums agree for every edge count."""
    return g1.n == g2.n and tu_weight_sums(g1) == tu_weight_sums(g2)
