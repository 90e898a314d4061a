"""Graph constructions and closed-form spectrum predictions.

Index convention for the two-halves families: with half size ``k``, the
vertex ``u_t`` (``t = 1..k``) is index ``t - 1`` and ``v_t`` is ``k + t - 1``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import (
    AdjacentPair,
    BadK,
    BalancedWithoutZero,
    Disconnected,
    EdgeCollision,
    NegativeLaplacianEigenvalue,
    NotUnbalancedUnicyclic,
    OddOrder,
    TooSmall,
    ZeroP,
)
from .graph import SignedGraph, build_graph, is_balanced
from .linalg import (
    DEFAULT_TOL,
    Orientation,
    RealSpectrum,
    adjacency_poly,
    default_orientation,
    eigenvalues,
    laplacian_matrix,
)
from .spectra import energy

# ---------------------------------------------------------------------------
# small named graphs


def empty_graph(n: int) -> SignedGraph:
    return SignedGraph(n)


def complete_graph(n: int, sign: int = 1) -> SignedGraph:
    return build_graph(n, [(u, v, sign) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int, sign: int = 1) -> SignedGraph:
    return build_graph(n, [(i, i + 1, sign) for i in range(n - 1)])


def cycle_graph(n: int, signs: int | Sequence[int] = 1) -> SignedGraph:
    """Cycle ``0-1-...-(n-1)-0``; ``signs`` is one sign or one per edge in that order."""
    if n < 3:
        raise TooSmall("a cycle needs at least 3 vertices")
    if isinstance(signs, int):
        signs = [signs] * n
    return build_graph(n, [(i, (i + 1) % n, s) for i, s in enumerate(signs)])


def random_signed_graph(
    n: int,
    rng: np.random.Generator,
    density: float = 0.5,
    negative: float = 0.5,
    connected: bool = False,
) -> SignedGraph:
    """Erdos-Renyi graph with independent random signs.

    With ``connected=True`` a random spanning tree is laid down first.
    """
    edges: dict[tuple[int, int], int] = {}
    if connected and n > 1:
        perm = rng.permutation(n)
        for i in range(1, n):
            a, b = int(perm[i]), int(perm[rng.integers(0, i)])
            edges[(min(a, b), max(a, b))] = 1
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < density:
                edges[(u, v)] = 1
    keys = sorted(edges)
    signs = np.where(rng.random(len(keys)) < negative, -1, 1)
    return build_graph(n, [(u, v, int(s)) for (u, v), s in zip(keys, signs)])


# ---------------------------------------------------------------------------
# partial transpose and the two-halves families


@dataclass(frozen=True)
class Bipartition:
    """``V1 = 0..half_size-1`` and ``V2 = half_size..2*half_size-1``."""

    half_size: int

    def check(self, g: SignedGraph) -> None:
        if g.n != 2 * self.half_size:
            raise OddOrder(f"order {g.n} is not 2 * {self.half_size}")

    def u(self, t: int) -> int:
        return t - 1

    def v(self, t: int) -> int:
        return self.half_size + t - 1


def partial_transpose(g: SignedGraph, bp: Bipartition | None = None) -> SignedGraph:
    """Replace every cross edge ``(u_i, v_j)`` by ``(u_j, v_i)`` with the same sign."""
    if bp is None:
        if g.n % 2:
            raise OddOrder(f"order {g.n} is odd")
        bp = Bipartition(g.n // 2)
    bp.check(g)
    k = bp.half_size
    kept: dict[tuple[int, int], int] = {}
    moved: dict[tuple[int, int], int] = {}
    for u, v, s in g.edges:
        if u < k <= v:
            i, j = u, v - k
            key = (j, k + i)
            if key in moved:
                raise EdgeCollision(f"two cross edges map to {key}")
            moved[key] = s
        else:
            kept[(u, v)] = s
    for key in moved:
        if key in kept:
            raise EdgeCollision(f"transposed edge {key} already present")
    kept.update(moved)
    return SignedGraph(g.n, tuple((u, v, s) for (u, v), s in sorted(kept.items())))


@dataclass(frozen=True)
class PairFamily:
    """Graphs of one two-halves construction, all of the same order.

    ``gamma1_tau`` is the partial transpose of ``gamma1``. ``gamma_prime``
    (cycle family only) is ``gamma1`` with the negative ``(u_i, v_i)``
    made positive and ``(v_{n-1}, v_n)`` made negative: same underlying
    graph and the same Laplacian determinant, different Laplacian spectrum.
    ``experimental`` flags parameter choices outside the verified range.
    """

    order: int
    gamma1: SignedGraph
    gamma1_tau: SignedGraph
    gamma2: SignedGraph
    gamma3: SignedGraph
    gamma4: SignedGraph | None = None
    gamma5: SignedGraph | None = None
    gamma_prime: SignedGraph | None = None
    experimental: bool = False

    def members(self) -> dict[str, SignedGraph]:
        names = ("gamma1", "gamma1_tau", "gamma2", "gamma3", "gamma4", "gamma5", "gamma_prime")
        return {k: getattr(self, k) for k in names if getattr(self, k) is not None}

    def pairs(self) -> list[tuple[str, str]]:
        """Member pairs claimed to be Laplacian cospectral and non-isomorphic."""
        out = [("gamma1", "gamma1_tau"), ("gamma2", "gamma3")]
        if self.gamma4 is not None:
            out.append(("gamma4", "gamma5"))
        return out


def _edit(g: SignedGraph, remove: Iterable[tuple[int, int]], add: Iterable[tuple[int, int, int]]):
    es = {(u, v): s for u, v, s in g.edges}
    for u, v in remove:
        es.pop((min(u, v), max(u, v)), None)
    for u, v, s in add:
        es[(min(u, v), max(u, v))] = s
    return build_graph(g.n, [(u, v, s) for (u, v), s in es.items()])


def path_pair_family(n: int) -> PairFamily:
    """Two positive paths ``u_1..u_n``, ``v_1..v_n`` plus three extra edges.

    ``gamma1`` adds ``(u_1,u_n,+)``, ``(u_1,v_1,-)``, ``(u_1,v_n,+)``;
    ``gamma2`` negates ``(u_{n-1},u_n)`` and makes ``(u_1,v_1)`` positive;
    ``gamma3`` negates ``(u_{n-1},u_n)`` in the partial transpose.
    At ``n = 3`` ``gamma1`` is the triangle-plus-path graph whose Laplacian
    polynomial is ``x^6 - 14x^5 + 73x^4 - 176x^3 + 196x^2 - 88x + 12``.
    """
    if n < 3:
        raise TooSmall("the path family needs n >= 3")
    bp = Bipartition(n)
    u, v = bp.u, bp.v
    base = [(u(t), u(t + 1), 1) for t in range(1, n)] + [(v(t), v(t + 1), 1) for t in range(1, n)]
    g1 = build_graph(2 * n, base + [(u(1), u(n), 1), (u(1), v(1), -1), (u(1), v(n), 1)])
    g1t = partial_transpose(g1, bp)
    g2 = _edit(g1, [(u(n - 1), u(n)), (u(1), v(1))], [(u(n - 1), u(n), -1), (u(1), v(1), 1)])
    g3 = _edit(g1t, [(u(n - 1), u(n))], [(u(n - 1), u(n), -1)])
    return PairFamily(2 * n, g1, g1t, g2, g3)


def cycle_pair_family(n: int, i: int, j: int) -> PairFamily:
    """Two positive ``n``-cycles plus ``(u_i,u_j,+)``, ``(u_i,v_i,-)``, ``(u_i,v_j,+)``.

    ``i < j`` are 1-based and ``u_i``, ``u_j`` must not be adjacent on the
    cycle. ``gamma2..gamma5`` follow the construction literally, including
    its references to ``(u_1, v_1)``; only ``i == 1`` is verified, other
    ``i`` set ``experimental``.
    """
    if n < 4:
        raise TooSmall("the cycle family needs n >= 4")
    if not (1 <= i < j <= n):
        raise AdjacentPair(f"need 1 <= i < j <= n, got i={i}, j={j}")
    if j - i < 2 or (i == 1 and j == n):
        raise AdjacentPair(f"u_{i} and u_{j} are adjacent on the cycle")
    bp = Bipartition(n)
    u, v = bp.u, bp.v
    base = []
    for t in range(1, n + 1):
        nxt = t % n + 1
        base.append((u(t), u(nxt), 1))
        base.append((v(t), v(nxt), 1))
    g1 = build_graph(2 * n, base + [(u(i), u(j), 1), (u(i), v(i), -1), (u(i), v(j), 1)])
    g1t = partial_transpose(g1, bp)
    un = (u(n - 1), u(n))
    vn = (v(n - 1), v(n))
    uj = (u(j - 1), u(j))
    g2 = _edit(g1, [un, (u(i), v(i)), uj], [(*un, -1), (u(1), v(1), 1), (*uj, -1)])
    g3 = _edit(g1t, [un, uj], [(*un, -1), (*uj, -1)])
    g4 = _edit(g1, [vn, (u(i), v(i)), uj], [(*vn, -1), (u(1), v(1), 1), (*uj, -1)])
    g5 = _edit(g1t, [vn, uj], [(*vn, -1), (*uj, -1)])
    gp = _edit(g1, [(u(i), v(i)), vn], [(u(i), v(i), 1), (*vn, -1)])
    return PairFamily(2 * n, g1, g1t, g2, g3, g4, g5, gp, experimental=(i != 1))


# ---------------------------------------------------------------------------
# subdivision-type operations


def subdivision(g: SignedGraph, o: Orientation | None = None) -> SignedGraph:
    """Insert vertex ``n + j`` on edge ``j``; its two edges carry the arrows of ``o``."""
    if o is None:
        o = default_orientation(g)
    o.check(g)
    edges = []
    for j, ((a, b, _), (sa, sb)) in enumerate(zip(g.edges, o.arrows)):
        edges.append((a, g.n + j, sa))
        edges.append((b, g.n + j, sb))
    return build_graph(g.n + g.m, edges)


def _require_connected(g: SignedGraph) -> None:
    if not g.is_connected():
        raise Disconnected("operation requires a connected graph")


def s_p(g: SignedGraph, p: int) -> SignedGraph:
    """Replace each edge by ``p`` subdivision vertices.

    Copy ``c`` of edge ``j`` is vertex ``n + c*m + j``; ``s_p(g, 1)`` is
    ``subdivision(g)``.
    """
    if p < 1:
        raise ZeroP(f"p must be >= 1, got {p}")
    _require_connected(g)
    arrows = default_orientation(g).arrows
    n, m = g.n, g.m
    edges = []
    for c in range(p):
        for j, ((a, b, _), (sa, sb)) in enumerate(zip(g.edges, arrows)):
            x = n + c * m + j
            edges.append((a, x, sa))
            edges.append((b, x, sb))
    return build_graph(n + p * m, edges)


def spk_block_layout(n: int, m: int, p: int, k: int) -> list[tuple[str, int, int]]:
    """Blocks of ``s_p_k`` as ``(kind, copy, offset)``, alternating vertex/edge.

    ``k == p`` gives ``V E V E ... V E``; ``k == p - 1`` ends on a vertex block.
    """
    blocks = []
    offset = 0
    for b in range((p + 1) + (k + 1)):
        kind = "V" if b % 2 == 0 else "E"
        blocks.append((kind, b // 2, offset))
        offset += n if kind == "V" else m
    return blocks


def s_p_k(g: SignedGraph, p: int, k: int) -> SignedGraph:
    """Clone every original vertex of ``S(g)`` ``p`` times and every edge vertex ``k`` times.

    Each clone copies the signed neighbourhood of its source, so every
    vertex copy meets every edge copy of an incident edge. Vertices are laid
    out in the alternating block order of :func:`spk_block_layout`.
    """
    if p < 1:
        raise ZeroP(f"p must be >= 1, got {p}")
    if k not in (p, p - 1):
        raise BadK(f"k must be p or p-1, got p={p}, k={k}")
    _require_connected(g)
    n, m = g.n, g.m
    arrows = default_orientation(g).arrows
    blocks = spk_block_layout(n, m, p, k)
    vblocks = [off for kind, _, off in blocks if kind == "V"]
    eblocks = [off for kind, _, off in blocks if kind == "E"]
    edges = []
    for vo in vblocks:
        for eo in eblocks:
            for j, ((a, b, _), (sa, sb)) in enumerate(zip(g.edges, arrows)):
                edges.append((vo + a, eo + j, sa))
                edges.append((vo + b, eo + j, sb))
    return build_graph((p + 1) * n + (k + 1) * m, edges)


# ---------------------------------------------------------------------------
# predicted spectra


def _laplacian_values(lap, n: int, tol: float) -> list[float]:
    vals = lap.flat().tolist() if isinstance(lap, RealSpectrum) else [float(x) for x in lap]
    if len(vals) != n:
        raise ValueError(f"expected {n} Laplacian eigenvalues, got {len(vals)}")
    if any(x < -tol for x in vals):
        raise NegativeLaplacianEigenvalue(f"Laplacian eigenvalue {min(vals)} < 0")
    return sorted((max(x, 0.0) for x in vals), reverse=True)


def _scaled_spectrum(
    lap, n: int, balanced: bool, zeros: int, factor: int, tol: float
) -> RealSpectrum:
    mus = _laplacian_values(lap, n, tol)
    if balanced:
        if not mus or mus[-1] > tol:
            raise BalancedWithoutZero("a balanced graph must have Laplacian eigenvalue 0")
        mus = mus[:-1]
    if zeros < 0:
        raise ValueError("inconsistent n, m for the stated balance")
    vals = [0.0] * zeros
    for mu in mus:
        r = math.sqrt(factor * mu)
        vals += [r, -r]
    return RealSpectrum.from_values(vals, tol)


def predicted_sp_spectrum(
    lap, n: int, m: int, p: int, balanced: bool, tol: float = DEFAULT_TOL
) -> RealSpectrum:
    """Adjacency spectrum of ``s_p(g)`` from the Laplacian spectrum of ``g``.

    ``{0^(pm-n+2), +-sqrt(p mu_i), i < n}`` when balanced, otherwise
    ``{0^(pm-n), +-sqrt(p mu_i)}`` over all ``n`` eigenvalues.
    """
    if p < 1:
        raise ZeroP(f"p must be >= 1, got {p}")
    zeros = p * m - n + (2 if balanced else 0)
    return _scaled_spectrum(lap, n, balanced, zeros, p, tol)


def predicted_spk_spectrum(
    lap, n: int, m: int, p: int, k: int, balanced: bool, tol: float = DEFAULT_TOL
) -> RealSpectrum:
    """Adjacency spectrum of ``s_p_k(g)``: the ``s_p`` pattern with factor ``(p+1)(k+1)``."""
    if p < 1:
        raise ZeroP(f"p must be >= 1, got {p}")
    if k not in (p, p - 1):
        raise BadK(f"k must be p or p-1, got p={p}, k={k}")
    zeros = (p - 1) * n + (k + 1) * m + (2 if balanced else 0)
    return _scaled_spectrum(lap, n, balanced, zeros, (p + 1) * (k + 1), tol)


# ---------------------------------------------------------------------------
# products


def cartesian_product(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """Vertex ``(i, j)`` is ``i * g2.n + j``; an edge inherits the sign of the moving coordinate."""
    n2 = g2.n
    edges = []
    for a, b, s in g1.edges:
        edges += [(a * n2 + j, b * n2 + j, s) for j in range(n2)]
    for c, d, s in g2.edges:
        edges += [(i * n2 + c, i * n2 + d, s) for i in range(g1.n)]
    return build_graph(g1.n * n2, edges)


def kronecker_product(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """Adjacency matrix equals ``kron(A(g1), A(g2))``."""
    n2 = g2.n
    edges = []
    for a, b, s1 in g1.edges:
        for c, d, s2 in g2.edges:
            edges.append((a * n2 + c, b * n2 + d, s1 * s2))
            edges.append((a * n2 + d, b * n2 + c, s1 * s2))
    return build_graph(g1.n * n2, edges)


# ---------------------------------------------------------------------------
# equienergetic pairs from subdivisions


@dataclass(frozen=True)
class EquienergeticReport:
    noncospectral: bool
    equienergetic: bool
    condition_mu_n_ge_1: bool
    energy_cartesian: float
    energy_kronecker: float
    min_laplacian_eigenvalue: float

    @property
    def consistent(self) -> bool:
        return (self.noncospectral and self.equienergetic) == self.condition_mu_n_ge_1


def is_unbalanced_unicyclic(g: SignedGraph) -> bool:
    return g.m >= 1 and g.is_connected() and g.m == g.n and not is_balanced(g)


def equienergetic_subdivision_check(g: SignedGraph, tol: float = DEFAULT_TOL) -> EquienergeticReport:
    """Compare ``S(g) x K2`` and ``S(g) (x) K2`` for an unbalanced unicyclic ``g``."""
    if not is_unbalanced_unicyclic(g):
        raise NotUnbalancedUnicyclic("expected a connected unbalanced unicyclic graph")
    sg = subdivision(g)
    k2 = complete_graph(2)
    cart = cartesian_product(sg, k2)
    kron = kronecker_product(sg, k2)
    e_cart, e_kron = energy(cart), energy(kron)
    mu_min = float(np.linalg.eigvalsh(laplacian_matrix(g).astype(float)).min())
    return EquienergeticReport(
        noncospectral=adjacency_poly(cart) != adjacency_poly(kron),
        equienergetic=abs(e_cart - e_kron) <= tol,
        condition_mu_n_ge_1=mu_min >= 1.0 - tol,
        energy_cartesian=e_cart,
        energy_kronecker=e_kron,
        min_laplacian_eigenvalue=mu_min,
    )


def laplacian_spectrum(g: SignedGraph, tol: float = DEFAULT_TOL) -> RealSpectrum:
    return eigenvalues(laplacian_matrix(g), tol)
