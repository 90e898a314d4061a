"""Matrices of signed graphs, exact characteristic polynomials, spectra.

The exact path (:func:`char_poly_exact`, :func:`rank_exact`) never rounds:
characteristic polynomials are computed modulo enough word-sized primes to
cover a Hadamard bound on the coefficients and lifted by the Chinese
remainder theorem. Floating eigenvalues (:func:`eigenvalues`) exist for
energy and display only.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._kernels import get_backend
from .errors import InconsistentOrientation, NonSquare, NonSymmetric
from .graph import SignedGraph

DEFAULT_TOL = 1e-9

# ---------------------------------------------------------------------------
# integer polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> IntPolynomial:
        return cls(list(coeffs)[::-1])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        cs = [1]
        for r in roots:
            nxt = [0] * (len(cs) + 1)
            for i, c in enumerate(cs):
                nxt[i + 1] += c
                nxt[i] -= r * c
            cs = nxt
        return cls(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def descending(self) -> list[int]:
        return list(self.coeffs[::-1])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_linear(self, r: int) -> tuple[IntPolynomial, int]:
        """Synthetic division by ``x - r``: quotient and remainder."""
        if not self.coeffs:
            return self, 0
        out = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop()
        return IntPolynomial(out[::-1]), rem

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if power == 0:
                body = str(a)
            else:
                mono = "x" if power == 1 else f"x^{power}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


# ---------------------------------------------------------------------------
# integer matrices of a signed graph


def adjacency_matrix(g: SignedGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.edges:
        a[u, v] = a[v, u] = s
    return a


def degree_matrix(g: SignedGraph) -> np.ndarray:
    return np.diag(np.array(g.degrees, dtype=np.int64)).reshape(g.n, g.n)


def laplacian_matrix(g: SignedGraph) -> np.ndarray:
    """``D - A``; for an all-negative graph this is the signless Laplacian."""
    return degree_matrix(g) - adjacency_matrix(g)


def kronecker_matrix(P, Q) -> np.ndarray:
    """Block matrix ``(p_ij * Q)``."""
    return np.kron(np.asarray(P), np.asarray(Q))


# ---------------------------------------------------------------------------
# exact characteristic polynomial


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.4e14
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIMES: list[int] = []


def _primes(count: int) -> list[int]:
    """The ``count`` largest primes below ``2**31``."""
    candidate = _PRIMES[-1] - 2 if _PRIMES else (1 << 31) - 1
    while len(_PRIMES) < count:
        if _is_prime(candidate):
            _PRIMES.append(candidate)
        candidate -= 2
    return _PRIMES[:count]


def _as_int_rows(M) -> list[list[int]]:
    arr = np.asarray(M)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {arr.shape}")
    if arr.dtype.kind not in "iubO" and not np.all(arr == np.round(arr)):
        raise TypeError("matrix entries must be integers")
    return [[int(x) for x in row] for row in arr.tolist()]


def coefficient_bound_bits(rows: Sequence[Sequence[int]]) -> float:
    """log2 of a bound on every coefficient of ``det(xI - M)``.

    Each coefficient is a sum of principal minors; Hadamard's inequality
    bounds the sum over all minors by ``prod(1 + ||row_i||)``.
    """
    return sum(math.log2(1.0 + math.sqrt(sum(x * x for x in row))) for row in rows)


def char_poly_exact(M, backend: str | None = None) -> IntPolynomial:
    """Exact monic ``det(xI - M)`` of a square integer matrix."""
    rows = _as_int_rows(M)
    n = len(rows)
    if n == 0:
        return IntPolynomial([1])
    kern = get_backend(backend)
    need = coefficient_bound_bits(rows) + 2.0
    primes = []
    bits = 0.0
    k = 0
    while bits <= need:
        k += 1
        primes = _primes(k)
        bits += math.log2(primes[-1])
    residues = []
    for p in primes:
        a = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
        residues.append([int(c) for c in kern.charpoly_mod_p(a, p)])
    coeffs = _crt(residues, primes)
    return IntPolynomial(coeffs)


def _crt(residues: list[list[int]], primes: list[int]) -> list[int]:
    modulus = 1
    acc = [0] * len(residues[0])
    for res, p in zip(residues, primes):
        # Garner step: lift acc (mod modulus) and res (mod p) to mod modulus*p
        inv = pow(modulus % p, -1, p)
        for i, r in enumerate(res):
            t = (r - acc[i]) * inv % p
            acc[i] += modulus * t
        modulus *= p
    half = modulus // 2
    return [c - modulus if c > half else c for c in acc]


def rank_exact(M) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    arr = np.asarray(M)
    if arr.size == 0:
        return 0
    a = [[int(x) for x in row] for row in arr.tolist()]
    rows, cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        for r in range(rank + 1, rows):
            row = a[r]
            f = row[c]
            for k in range(c + 1, cols):
                row[k] = (row[k] * pr[c] - f * pr[k]) // prev
            row[c] = 0
        prev = pr[c]
        rank += 1
        if rank == rows:
            break
    return rank


# ---------------------------------------------------------------------------
# floating spectra


@dataclass(frozen=True)
class RealSpectrum:
    """Eigenvalue multiset as descending ``(value, multiplicity)`` groups."""

    values: tuple[tuple[float, int], ...]
    tol: float = DEFAULT_TOL

    @classmethod
    def from_values(cls, xs: Iterable[float], tol: float = DEFAULT_TOL) -> RealSpectrum:
        """Merge values closer than ``tol`` (chained) into one group.

        A group's representative is its mean; representatives within ``tol``
        of zero are reported as exactly 0.
        """
        srt = sorted((float(x) for x in xs), reverse=True)
        groups: list[list[float]] = []
        for x in srt:
            if groups and groups[-1][-1] - x <= tol:
                groups[-1].append(x)
            else:
                groups.append([x])
        vals = []
        for grp in groups:
            rep = math.fsum(grp) / len(grp)
            if abs(rep) <= tol:
                rep = 0.0
            vals.append((rep, len(grp)))
        return cls(tuple(vals), tol)

    @property
    def order(self) -> int:
        return sum(mult for _, mult in self.values)

    def flat(self) -> np.ndarray:
        """All eigenvalues with repetition, descending."""
        return np.array([v for v, mult in self.values for _ in range(mult)], dtype=float)

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        tol = self.tol if tol is None else tol
        return sum(mult for v, mult in self.values if abs(v - value) <= tol)

    def matches(self, other: RealSpectrum, tol: float | None = None) -> bool:
        """Equal as multisets, value by value within ``tol``."""
        tol = self.tol if tol is None else tol
        a, b = self.flat(), other.flat()
        return a.shape == b.shape and bool(np.all(np.abs(a - b) <= tol))

    def __str__(self) -> str:
        parts = []
        for v, mult in self.values:
            txt = f"{v:.12g}"
            parts.append(txt if mult == 1 else f"{txt}^({mult})")
        return "{" + ", ".join(parts) + "}"


def eigenvalues(M, tol: float = DEFAULT_TOL) -> RealSpectrum:
    """Symmetric eigensolve, merged into a :class:`RealSpectrum`."""
    arr = np.asarray(M)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise NonSymmetric("eigenvalues() requires a symmetric matrix")
    if arr.shape[0] == 0:
        return RealSpectrum((), tol)
    return RealSpectrum.from_values(np.linalg.eigvalsh(arr.astype(float)), tol)


# ---------------------------------------------------------------------------
# bidirected orientations and incidence matrices


@dataclass(frozen=True)
class Orientation:
    """Per edge (in canonical edge order) the pair ``(at_u, at_v)`` of arrows.

    Valid for a graph when ``at_u * at_v == -sign`` on every edge.
    """

    arrows: tuple[tuple[int, int], ...]

    def check(self, g: SignedGraph) -> None:
        if len(self.arrows) != g.m:
            raise InconsistentOrientation(f"{len(self.arrows)} arrow pairs for {g.m} edges")
        for (u, v, s), (a, b) in zip(g.edges, self.arrows):
            if a not in (1, -1) or b not in (1, -1) or a * b != -s:
                raise InconsistentOrientation(f"arrows ({a}, {b}) invalid on edge ({u}, {v}, {s})")

    def flip(self, edges: Iterable[int]) -> Orientation:
        """Reverse both arrows of the listed edges (still valid)."""
        idx = set(edges)
        return Orientation(
            tuple((-a, -b) if j in idx else (a, b) for j, (a, b) in enumerate(self.arrows))
        )


def default_orientation(g: SignedGraph) -> Orientation:
    """Positive edge ``u<v``: (+1, -1); negative edge: (+1, +1)."""
    return Orientation(tuple((1, -1) if s > 0 else (1, 1) for _, _, s in g.edges))


def incidence_matrix(g: SignedGraph, o: Orientation | None = None) -> np.ndarray:
    """``n x m`` matrix ``B`` with ``B @ B.T == laplacian_matrix(g)``."""
    if o is None:
        o = default_orientation(g)
    o.check(g)
    b = np.zeros((g.n, g.m), dtype=np.int64)
    for j, ((u, v, _), (a, c)) in enumerate(zip(g.edges, o.arrows)):
        b[u, j] = a
        b[v, j] = c
    if __debug__:
        assert np.array_equal(b @ b.T, laplacian_matrix(g))
    return b


# ---------------------------------------------------------------------------
# cached per-graph polynomials


@lru_cache(maxsize=8192)
def adjacency_poly(g: SignedGraph) -> IntPolynomial:
    return char_poly_exact(adjacency_matrix(g))


@lru_cache(maxsize=8192)
def laplacian_poly(g: SignedGraph) -> IntPolynomial:
    return char_poly_exact(laplacian_matrix(g))
