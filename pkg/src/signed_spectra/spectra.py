"""Cospectrality, energy, integrality and spectral symmetry.

Cospectrality and integrality are decided on exact integer polynomials;
floating eigenvalues are only used for energies and displayed spectra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import SignedGraph
from .linalg import (
    DEFAULT_TOL,
    IntPolynomial,
    RealSpectrum,
    adjacency_matrix,
    adjacency_poly,
    eigenvalues,
    laplacian_matrix,
    laplacian_poly,
)


@dataclass(frozen=True)
class SpectralSummary:
    adjacency_poly: IntPolynomial
    laplacian_poly: IntPolynomial
    adjacency_spec: RealSpectrum
    laplacian_spec: RealSpectrum
    energy: float


@lru_cache(maxsize=4096)
def spectral_summary(g: SignedGraph, tol: float = DEFAULT_TOL) -> SpectralSummary:
    """Both polynomials, both spectra and the energy of ``g`` (memoised)."""
    return SpectralSummary(
        adjacency_poly=adjacency_poly(g),
        laplacian_poly=laplacian_poly(g),
        adjacency_spec=eigenvalues(adjacency_matrix(g), tol),
        laplacian_spec=eigenvalues(laplacian_matrix(g), tol),
        energy=energy(g),
    )


def cospectral(g1: SignedGraph, g2: SignedGraph) -> bool:
    return adjacency_poly(g1) == adjacency_poly(g2)


def laplacian_cospectral(g1: SignedGraph, g2: SignedGraph) -> bool:
    return laplacian_poly(g1) == laplacian_poly(g2)


def energy(g: SignedGraph) -> float:
    """Sum of absolute adjacency eigenvalues."""
    if g.n == 0:
        return 0.0
    vals = np.linalg.eigvalsh(adjacency_matrix(g).astype(float))
    return math.fsum(abs(float(x)) for x in vals)


def _root_bound(poly: IntPolynomial) -> int:
    """Fujiwara bound on the moduli of the roots of a monic polynomial."""
    d = poly.degree
    best = 0
    for k in range(1, d + 1):
        c = abs(poly.coefficient(d - k))
        if c == 0:
            continue
        r = max(1, int(math.exp(math.log(c) / k)))
        while r**k < c:
            r += 1
        best = max(best, r)
    return 2 * best


def integer_roots(poly: IntPolynomial) -> list[int] | None:
    """All roots with multiplicity if every root is an integer, else None.

    ``poly`` must be monic. Candidates are the divisors of the (x-free)
    constant term inside the Fujiwara bound; each is divided out by
    synthetic division for as long as it remains a root.
    """
    if poly.degree < 0 or poly.coeffs[-1] != 1:
        raise ValueError("integer_roots expects a monic polynomial")
    roots: list[int] = []
    cs = list(poly.coeffs)
    while len(cs) > 1 and cs[0] == 0:
        cs.pop(0)
        roots.append(0)
    rest = IntPolynomial(cs)
    bound = _root_bound(rest)
    r = 1
    while rest.degree > 0 and r <= bound:
        for cand in (r, -r):
            while rest.degree > 0 and rest.coeffs[0] % cand == 0:
                q, rem = rest.divmod_linear(cand)
                if rem != 0:
                    break
                rest = q
                roots.append(cand)
        r += 1
    return sorted(roots, reverse=True) if rest.degree == 0 else None


def is_integral(g: SignedGraph) -> bool:
    return integer_roots(adjacency_poly(g)) is not None


def spectrum_symmetric(g: SignedGraph) -> bool:
    """True iff the adjacency polynomial has the form of a symmetric spectrum.

    Odd-codegree coefficients vanish and coefficient of ``x**(n-2k)`` has
    sign ``(-1)**k`` (or is zero).
    """
    phi = adjacency_poly(g)
    n = g.n
    for j in range(1, n + 1):
        c = phi.coefficient(n - j)
        if j % 2 == 1:
            if c != 0:
                return False
        elif (-1) ** (j // 2) * c < 0:
            return False
    return True
