"""Exhaustive enumeration of small signed graphs and cospectral-pair search."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ._kernels import get_backend
from .errors import SizeLimitExceeded
from .graph import SignedGraph, signed_isomorphic, switching_isomorphic, to_json_obj
from .linalg import DEFAULT_TOL, IntPolynomial, adjacency_poly, laplacian_poly

MAX_ENUM_ORDER = 7


class Mode(str, Enum):
    ADJACENCY = "adj"
    LAPLACIAN = "lap"


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = DEFAULT_TOL
    max_order: int = MAX_ENUM_ORDER
    thread_count: int = 1
    seed: int = 0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.thread_count < 1:
            raise ValueError("thread_count must be at least 1")


@dataclass(frozen=True)
class PairReport:
    graph_a: SignedGraph
    graph_b: SignedGraph
    mode: Mode
    isomorphic_strict: bool
    switching_isomorphic: bool
    shared_poly: IntPolynomial

    def to_json_obj(self) -> dict:
        return {
            "mode": self.mode.value,
            "graph_a": to_json_obj(self.graph_a),
            "graph_b": to_json_obj(self.graph_b),
            "isomorphic_strict": self.isomorphic_strict,
            "switching_isomorphic": self.switching_isomorphic,
            "shared_poly": self.shared_poly.descending(),
        }


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _atlas(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Edge lists of all graphs on ``n`` vertices, one per isomorphism class."""
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n:
            out.append(tuple(sorted((min(a, b), max(a, b)) for a, b in h.edges())))
    return tuple(out)


def _spanning_forest(n: int, edges: tuple[tuple[int, int], ...]):
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for j, (a, b) in enumerate(edges):
        adj[a].append((b, j))
        adj[b].append((a, j))
    seen = [False] * n
    parent, child, tree_edge = [], [], []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, j in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent.append(x)
                    child.append(y)
                    tree_edge.append(j)
                    queue.append(y)
    in_tree = set(tree_edge)
    nontree = [j for j in range(len(edges)) if j not in in_tree]
    as_arr = lambda xs: np.array(xs, dtype=np.int64)  # noqa: E731
    return as_arr(parent), as_arr(child), as_arr(tree_edge), as_arr(nontree)


def _automorphism_generators(n: int, edges) -> list[tuple[int, ...]]:
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    ident = tuple(range(n))
    group = {ident}
    gens: list[tuple[int, ...]] = []
    for iso in GraphMatcher(h, h).isomorphisms_iter():
        perm = tuple(iso[i] for i in range(n))
        if perm in group:
            continue
        gens.append(perm)
        queue = deque(group)
        while queue:
            g = queue.popleft()
            for s in gens:
                c = tuple(s[g[i]] for i in range(n))
                if c not in group:
                    group.add(c)
                    queue.append(c)
    return gens


def switching_class_representatives(
    n: int, edges: tuple[tuple[int, int], ...], backend: str | None = None
) -> list[int]:
    """Minimal class index of each orbit of switching classes under ``Aut``.

    Class ``c`` signs the non-forest edges by the bits of ``c`` (1 = negative)
    and keeps the spanning-forest edges positive.
    """
    parent, child, tree_edge, nontree = _spanning_forest(n, edges)
    beta = len(nontree)
    if beta == 0:
        return [0]
    count = 1 << beta
    idx = np.arange(count, dtype=np.int64)
    m = len(edges)
    bits = np.zeros((count, m), dtype=np.int8)
    for b, j in enumerate(nontree):
        bits[:, j] = (idx >> b) & 1
    eu = np.array([a for a, _ in edges], dtype=np.int64)
    ev = np.array([b for _, b in edges], dtype=np.int64)
    where = {e: j for j, e in enumerate(edges)}
    kern = get_backend(backend)
    src, dst = [idx], [idx]
    for perm in _automorphism_generators(n, edges):
        emap = np.array(
            [where[(min(perm[a], perm[b]), max(perm[a], perm[b]))] for a, b in edges],
            dtype=np.int64,
        )
        moved = np.empty_like(bits)
        moved[:, emap] = bits
        src.append(idx)
        dst.append(kern.switch_class_index(moved, eu, ev, parent, child, tree_edge, nontree, n))
    rows, cols = np.concatenate(src), np.concatenate(dst)
    graph = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(count, count))
    _, labels = connected_components(graph, directed=True, connection="weak")
    first: dict[int, int] = {}
    for c, lab in enumerate(labels.tolist()):
        first.setdefault(lab, c)
    return sorted(first.values())


def enumerate_signed_graphs(
    n: int, connected_only: bool = False, backend: str | None = None
) -> Iterator[SignedGraph]:
    """One representative per switching-isomorphism class on ``n`` vertices.

    Underlying graphs come from the graph atlas (in atlas order); within one
    underlying graph the representatives are listed by class index, the
    all-positive (balanced) class first.
    """
    if n > MAX_ENUM_ORDER:
        raise SizeLimitExceeded(f"enumeration limited to n <= {MAX_ENUM_ORDER}")
    for edges in _atlas(n):
        base = SignedGraph(n, tuple((a, b, 1) for a, b in edges))
        if connected_only and not base.is_connected():
            continue
        _, _, _, nontree = _spanning_forest(n, edges)
        for c in switching_class_representatives(n, edges, backend):
            signs = [1] * len(edges)
            for b, j in enumerate(nontree.tolist()):
                if (c >> b) & 1:
                    signs[j] = -1
            yield base.with_signs(signs)


# ---------------------------------------------------------------------------
# cospectral pair search


def _poly_for(mode: Mode):
    return adjacency_poly if mode is Mode.ADJACENCY else laplacian_poly


def _chunks(total: int, parts: int) -> list[range]:
    parts = max(1, min(parts, total or 1))
    step, extra = divmod(total, parts)
    out, start = [], 0
    for i in range(parts):
        end = start + step + (1 if i < extra else 0)
        out.append(range(start, end))
        start = end
    return out


def find_cospectral_pairs(
    n: int,
    mode: Mode | str = Mode.LAPLACIAN,
    connected_only: bool = False,
    config: RunConfig | None = None,
) -> list[PairReport]:
    """All pairs of enumerated representatives with equal exact polynomials.

    Work is split into contiguous index ranges, one per worker, and merged
    in range order, so the result does not depend on ``thread_count``.
    """
    config = config or RunConfig()
    mode = Mode(mode)
    if n > config.max_order:
        raise SizeLimitExceeded(f"search limited to n <= {config.max_order}")
    reps = list(enumerate_signed_graphs(n, connected_only))
    poly = _poly_for(mode)

    def work(r: range) -> list[IntPolynomial]:
        return [poly(reps[i]) for i in r]

    ranges = _chunks(len(reps), config.thread_count)
    with ThreadPoolExecutor(max_workers=config.thread_count) as pool:
        parts = list(pool.map(work, ranges))
    polys = [p for part in parts for p in part]

    groups: dict[IntPolynomial, list[int]] = {}
    for i, p in enumerate(polys):
        groups.setdefault(p, []).append(i)
    pairs = []
    for members in groups.values():
        for x in range(len(members)):
            for y in range(x + 1, len(members)):
                pairs.append((members[x], members[y]))
    pairs.sort()
    out = []
    for i, j in pairs:
        a, b = reps[i], reps[j]
        out.append(
            PairReport(
                graph_a=a,
                graph_b=b,
                mode=mode,
                isomorphic_strict=signed_isomorphic(a, b) is not None,
                switching_isomorphic=switching_isomorphic(a, b),
                shared_poly=polys[i],
            )
        )
    return out
