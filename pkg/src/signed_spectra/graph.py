"""Signed graph data model: canonical storage, switching, balance, isomorphism.

Vertices are the dense indices ``0..n-1``. An edge is a triple ``(u, v, s)``
with ``u < v`` and ``s`` in ``{+1, -1}``; the edge tuple of a
:class:`SignedGraph` is always sorted, which makes equal graphs compare and
hash equal.
"""

from __future__ import annotations

import json
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DuplicateEdge,
    InvalidSign,
    LoopEdge,
    SignedGraphError,
    SizeLimitExceeded,
    VertexOutOfRange,
)

POSITIVE = 1
NEGATIVE = -1

#: Largest order accepted by the backtracking isomorphism tests.
MAX_ISO_ORDER = 40

Edge = tuple[int, int, int]
VertexPermutation = tuple[int, ...]


@dataclass(frozen=True)
class SignedGraph:
    """Immutable simple signed graph in canonical form.

    Use :func:`build_graph` to create one from arbitrary input; the
    constructor only accepts data that is already canonical.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise VertexOutOfRange(f"negative vertex count {self.n}")
        prev = None
        for u, v, s in self.edges:
            if s not in (POSITIVE, NEGATIVE):
                raise InvalidSign(f"sign {s!r} on edge ({u}, {v})")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) not canonical for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise DuplicateEdge(f"edge list not strictly sorted at ({u}, {v})")
            prev = (u, v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _sign_map(self) -> dict[tuple[int, int], int]:
        return {(u, v): s for u, v, s in self.edges}

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {(u, v): j for j, (u, v, _) in enumerate(self.edges)}

    @cached_property
    def adjacency_lists(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the sorted ``(neighbour, sign)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u].append((v, s))
            adj[v].append((u, s))
        return tuple(tuple(sorted(a)) for a in adj)

    def sign(self, u: int, v: int) -> int:
        """Sign of edge ``uv``, or 0 when absent."""
        if u > v:
            u, v = v, u
        return self._sign_map.get((u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return self.sign(u, v) != 0

    def degree(self, v: int) -> int:
        return len(self.adjacency_lists[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency_lists)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y, _ in self.adjacency_lists[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return self.n >= 1 and len(self.components) == 1

    @property
    def negative_count(self) -> int:
        return sum(1 for *_, s in self.edges if s < 0)

    def underlying_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, _ in self.edges)

    def with_signs(self, signs: Sequence[int]) -> SignedGraph:
        """Same underlying graph, new signs listed in edge order."""
        if len(signs) != self.m:
            raise ValueError(f"expected {self.m} signs, got {len(signs)}")
        return SignedGraph(self.n, tuple((u, v, int(s)) for (u, v, _), s in zip(self.edges, signs)))

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, edges={list(self.edges)})"


def build_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> SignedGraph:
    """Validate and canonicalise ``edges`` on ``n`` vertices.

    Endpoints may come in either order; duplicates (in either orientation)
    and loops are rejected.

    >>> build_graph(3, [(1, 0, 1)]).edges
    ((0, 1, 1),)
    """
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    seen: dict[tuple[int, int], int] = {}
    for edge in edges:
        if len(edge) != 3:
            raise SignedGraphError(f"edge {edge!r} must be (u, v, sign)")
        u, v, s = (int(x) for x in edge)
        if s not in (POSITIVE, NEGATIVE):
            raise InvalidSign(f"sign {edge[2]!r} on edge ({u}, {v})")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen[key] = s
    return SignedGraph(n, tuple((u, v, s) for (u, v), s in sorted(seen.items())))


def _check_vertices(g: SignedGraph, vertices: Iterable[int]) -> frozenset[int]:
    xs = frozenset(int(x) for x in vertices)
    for x in xs:
        if not 0 <= x < g.n:
            raise VertexOutOfRange(f"vertex {x} outside 0..{g.n - 1}")
    return xs


def switch(g: SignedGraph, X: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one endpoint in ``X``."""
    xs = _check_vertices(g, X)
    return SignedGraph(
        g.n, tuple((u, v, -s if (u in xs) != (v in xs) else s) for u, v, s in g.edges)
    )


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, tuple((u, v, -s) for u, v, s in g.edges))


def balance_potential(g: SignedGraph) -> tuple[int, ...] | None:
    """A vertex potential ``pi`` with ``s(uv) = pi(u) * pi(v)``, or None.

    Found by BFS per component; a contradiction means some cycle is negative.
    """
    pot = [0] * g.n
    for start in range(g.n):
        if pot[start]:
            continue
        pot[start] = 1
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, s in g.adjacency_lists[x]:
                want = pot[x] * s
                if pot[y] == 0:
                    pot[y] = want
                    queue.append(y)
                elif pot[y] != want:
                    return None
    return tuple(pot)


def is_balanced(g: SignedGraph) -> bool:
    return balance_potential(g) is not None


def all_positive(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, tuple((u, v, POSITIVE) for u, v, _ in g.edges))


# ---------------------------------------------------------------------------
# isomorphism


def _refine(adj: list[list[tuple[int, int]]], init: list, signed: bool) -> list[int]:
    """Colour refinement; returns stable integer colours.

    ``adj`` may describe a disjoint union so that colours are comparable
    across the parts.
    """
    colours = init
    n_classes = len(set(colours))
    while True:
        if signed:
            sigs = [
                (colours[v], tuple(sorted((s, colours[w]) for w, s in adj[v])))
                for v in range(len(adj))
            ]
        else:
            sigs = [
                (colours[v], tuple(sorted(colours[w] for w, _ in adj[v])))
                for v in range(len(adj))
            ]
        table = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [table[sig] for sig in sigs]
        if len(table) == n_classes:
            return new
        colours, n_classes = new, len(table)


def _bfs_order(g: SignedGraph, colours: Sequence[int]) -> list[int]:
    freq: dict[int, int] = {}
    for c in colours:
        freq[c] = freq.get(c, 0) + 1
    order: list[int] = []
    seen = [False] * g.n
    # components are started from their rarest-coloured vertex
    starts = sorted(range(g.n), key=lambda v: (freq[colours[v]], -g.degree(v), v))
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            nbrs = sorted(
                (y for y, _ in g.adjacency_lists[x] if not seen[y]),
                key=lambda y: (freq[colours[y]], y),
            )
            for y in nbrs:
                seen[y] = True
                queue.append(y)
    return order


def _search(g1: SignedGraph, g2: SignedGraph, switching: bool) -> VertexPermutation | None:
    n = g1.n
    if g2.n != n or g2.m != g1.m:
        return None
    if n > MAX_ISO_ORDER:
        raise SizeLimitExceeded(f"isomorphism search limited to n <= {MAX_ISO_ORDER}")
    if not switching and g1.negative_count != g2.negative_count:
        return None
    if sorted(g1.degrees) != sorted(g2.degrees):
        return None

    adj = [list(a) for a in g1.adjacency_lists] + [
        [(w + n, s) for w, s in a] for a in g2.adjacency_lists
    ]
    if switching:
        init = [len(a) for a in adj]
    else:
        init = [(sum(1 for _, s in a if s > 0), sum(1 for _, s in a if s < 0)) for a in adj]
        table = {c: i for i, c in enumerate(sorted(set(init)))}
        init = [table[c] for c in init]
    colours = _refine(adj, init, signed=not switching)
    c1, c2 = colours[:n], colours[n:]
    if sorted(c1) != sorted(c2):
        return None

    by_colour: dict[int, list[int]] = {}
    for w in range(n):
        by_colour.setdefault(c2[w], []).append(w)

    order = _bfs_order(g1, c1)
    fwd = [-1] * n
    used = [False] * n
    theta = [0] * n
    adj1, adj2 = g1.adjacency_lists, g2.adjacency_lists

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        mapped = [(u, s) for u, s in adj1[v] if fwd[u] >= 0]
        for w in by_colour[c1[v]]:
            if used[w]:
                continue
            # w must see exactly the images of v's mapped neighbours
            if sum(1 for x, _ in adj2[w] if used[x]) != len(mapped):
                continue
            th = 0
            ok = True
            for u, s in mapped:
                s2 = g2.sign(fwd[u], w)
                if s2 == 0:
                    ok = False
                    break
                if switching:
                    need = theta[u] * s * s2
                    if th == 0:
                        th = need
                    elif th != need:
                        ok = False
                        break
                elif s2 != s:
                    ok = False
                    break
            if not ok:
                continue
            fwd[v] = w
            used[w] = True
            theta[v] = th or 1
            if extend(depth + 1):
                return True
            fwd[v] = -1
            used[w] = False
            theta[v] = 0
        return False

    return tuple(fwd) if extend(0) else None


def signed_isomorphic(g1: SignedGraph, g2: SignedGraph) -> VertexPermutation | None:
    """Sign-preserving isomorphism ``g1 -> g2`` as a vertex image tuple, or None.

    Backtracking over colour-refined candidate classes; limited to
    ``n <= MAX_ISO_ORDER``.
    """
    return _search(g1, g2, switching=False)


def switching_isomorphism(g1: SignedGraph, g2: SignedGraph) -> VertexPermutation | None:
    """Vertex map ``pi`` such that ``g2`` is a switching of ``pi(g1)``, or None."""
    return _search(g1, g2, switching=True)


def switching_isomorphic(g1: SignedGraph, g2: SignedGraph) -> bool:
    return switching_isomorphism(g1, g2) is not None


def permute(g: SignedGraph, image: Sequence[int]) -> SignedGraph:
    """Relabel vertex ``v`` as ``image[v]``."""
    if sorted(image) != list(range(g.n)):
        raise SignedGraphError("image is not a permutation of the vertex set")
    return build_graph(g.n, ((image[u], image[v], s) for u, v, s in g.edges))


# ---------------------------------------------------------------------------
# JSON format: {"n": <int>, "edges": [[u, v, s], ...]}


def to_json_obj(g: SignedGraph) -> dict:
    return {"n": g.n, "edges": [[u, v, s] for u, v, s in g.edges]}


def from_json_obj(obj: dict) -> SignedGraph:
    """Parse the JSON graph object, enforcing canonical order as written."""
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise SignedGraphError('graph JSON must be an object with "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise SignedGraphError('"n" must be an integer')
    edges = []
    for e in obj["edges"]:
        if not isinstance(e, list) or len(e) != 3 or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in e
        ):
            raise SignedGraphError(f"malformed edge {e!r}")
        edges.append(tuple(e))
    # canonical-order violations surface through the SignedGraph checks
    for u, v, s in edges:
        if s not in (POSITIVE, NEGATIVE):
            raise InvalidSign(f"sign {s!r} on edge ({u}, {v})")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u > v:
            raise VertexOutOfRange(f"edge ({u}, {v}) must have u < v")
    keys = [(u, v) for u, v, _ in edges]
    if len(set(keys)) != len(keys):
        raise DuplicateEdge("duplicate edge in JSON")
    if keys != sorted(keys):
        raise SignedGraphError("edges must be sorted")
    return SignedGraph(n, tuple(edges))


def dumps(g: SignedGraph) -> str:
    return json.dumps(to_json_obj(g), separators=(",", ":"))


def loads(text: str) -> SignedGraph:
    return from_json_obj(json.loads(text))
