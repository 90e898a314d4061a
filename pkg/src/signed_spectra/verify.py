"""Reproduce the published fixtures and report computed vs expected values."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

import numpy as np

from .construct import (
    cartesian_product,
    complete_graph,
    cycle_graph,
    equienergetic_subdivision_check,
    kronecker_product,
    partial_transpose,
    predicted_sp_spectrum,
    predicted_spk_spectrum,
    random_signed_graph,
    s_p,
    s_p_k,
    subdivision,
    path_pair_family,
    cycle_pair_family,
)
from .graph import (
    SignedGraph,
    all_positive,
    is_balanced,
    negate,
    signed_isomorphic,
    switch,
)
from .linalg import (
    IntPolynomial,
    RealSpectrum,
    adjacency_matrix,
    adjacency_poly,
    eigenvalues,
    laplacian_matrix,
    laplacian_poly,
)
from .search import RunConfig, enumerate_signed_graphs
from .spectra import cospectral, energy, integer_roots, is_integral, spectrum_symmetric
from .tu import laplacian_charpoly_via_tu

PATH3_LAPLACIAN = IntPolynomial.from_descending([1, -14, 73, -176, 196, -88, 12])
PATH4_TRANSPOSE_PAIR = IntPolynomial.from_descending([1, -18, 131, -498, 1061, -1256, 764, -200, 16])
PATH4_EDITED_PAIR = IntPolynomial.from_descending([1, -18, 131, -498, 1065, -1288, 848, -280, 36])
CYCLE4_GAMMA1 = IntPolynomial.from_descending([1, -22, 197, -928, 2476, -3736, 2976, -1056, 128])
CYCLE4_GAMMA_PRIME = IntPolynomial.from_descending([1, -22, 197, -928, 2476, -3748, 3048, -1152, 128])

#: Every topic the fixture suite is expected to touch.
TOPICS = frozenset(
    {
        "tu-expansion",
        "path-family",
        "cycle-family",
        "determinant-vs-spectrum",
        "underlying-not-cospectral",
        "subdivision-spectrum",
        "cloned-subdivision-spectrum",
        "cospectral-subdivisions",
        "integral-subdivisions",
        "energy-scaling",
        "equienergetic-products",
        "symmetric-spectrum",
        "switching-invariance",
        "transpose-degree-sum",
    }
)


@dataclass(frozen=True)
class VerificationItem:
    name: str
    topic: str
    passed: bool
    expected: str
    computed: str

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}: expected {self.expected}; computed {self.computed}"


@dataclass
class VerificationReport:
    items: list[VerificationItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.items)

    @property
    def coverage(self) -> set[str]:
        return {it.topic for it in self.items}

    def failures(self) -> list[VerificationItem]:
        return [it for it in self.items if not it.passed]

    def add(self, name: str, topic: str, passed: bool, expected, computed) -> None:
        self.items.append(VerificationItem(name, topic, bool(passed), str(expected), str(computed)))


def _poly_item(rep: VerificationReport, name: str, topic: str, want: IntPolynomial, got: IntPolynomial):
    rep.add(name, topic, got == want, want, got)


def _sweep(
    rep: VerificationReport,
    name: str,
    topic: str,
    cases: Iterable,
    check: Callable[..., bool],
    describe: Callable[..., str] = repr,
) -> None:
    total, bad = 0, None
    for case in cases:
        total += 1
        if bad is None and not check(case):
            bad = case
    computed = f"{total} cases ok" if bad is None else f"counterexample {describe(bad)}"
    rep.add(name, topic, bad is None and total > 0, f"{total} cases ok", computed)


def _connected(n_max: int) -> Iterable[SignedGraph]:
    for n in range(2, n_max + 1):
        yield from enumerate_signed_graphs(n, connected_only=True)


def _check_path_families(rep: VerificationReport) -> None:
    f3 = path_pair_family(3)
    _poly_item(rep, "path family n=3 Laplacian polynomial (determinant)", "path-family",
               PATH3_LAPLACIAN, laplacian_poly(f3.gamma1))
    _poly_item(rep, "path family n=3 Laplacian polynomial (TU expansion)", "tu-expansion",
               PATH3_LAPLACIAN, laplacian_charpoly_via_tu(f3.gamma1))
    _poly_item(rep, "path family n=3 partial transpose polynomial", "path-family",
               PATH3_LAPLACIAN, laplacian_poly(f3.gamma1_tau))

    f4 = path_pair_family(4)
    for key in ("gamma1", "gamma1_tau"):
        _poly_item(rep, f"path family n=4 {key} polynomial", "path-family",
                   PATH4_TRANSPOSE_PAIR, laplacian_poly(getattr(f4, key)))
    for key in ("gamma2", "gamma3"):
        _poly_item(rep, f"path family n=4 {key} polynomial", "path-family",
                   PATH4_EDITED_PAIR, laplacian_poly(getattr(f4, key)))
    for a, b in f4.pairs():
        ga, gb = getattr(f4, a), getattr(f4, b)
        rep.add(f"path family n=4 {a}/{b} cospectral, not isomorphic", "path-family",
                laplacian_poly(ga) == laplacian_poly(gb) and signed_isomorphic(ga, gb) is None,
                "equal polynomials, no isomorphism",
                f"equal={laplacian_poly(ga) == laplacian_poly(gb)}, "
                f"isomorphism={signed_isomorphic(ga, gb)}")


def _check_cycle_family(rep: VerificationReport) -> None:
    f = cycle_pair_family(4, 1, 3)
    _poly_item(rep, "cycle family n=4 gamma1 polynomial", "cycle-family",
               CYCLE4_GAMMA1, laplacian_poly(f.gamma1))
    _poly_item(rep, "cycle family n=4 re-signed gamma1 polynomial", "determinant-vs-spectrum",
               CYCLE4_GAMMA_PRIME, laplacian_poly(f.gamma_prime))
    p1, pp = laplacian_poly(f.gamma1), laplacian_poly(f.gamma_prime)
    rep.add("cycle family n=4 equal det L, different spectrum", "determinant-vs-spectrum",
            p1.coefficient(0) == pp.coefficient(0) == 128 and p1 != pp,
            "det 128 and 128, polynomials differ",
            f"det {p1.coefficient(0)} and {pp.coefficient(0)}, differ={p1 != pp}")
    for a, b in f.pairs():
        ga, gb = getattr(f, a), getattr(f, b)
        same = laplacian_poly(ga) == laplacian_poly(gb)
        iso = signed_isomorphic(ga, gb)
        rep.add(f"cycle family n=4 {a}/{b} cospectral, not isomorphic", "cycle-family",
                same and iso is None, "equal polynomials, no isomorphism",
                f"equal={same}, isomorphism={iso}")
    u1, u2 = all_positive(f.gamma1), all_positive(f.gamma1_tau)
    ok = (
        not is_balanced(f.gamma1)
        and not is_balanced(f.gamma1_tau)
        and p1 == laplacian_poly(f.gamma1_tau)
        and signed_isomorphic(u1, u2) is None
        and adjacency_poly(u1) != adjacency_poly(u2)
    )
    rep.add("cycle family n=4 unbalanced cospectral pair over non-cospectral graphs",
            "underlying-not-cospectral", ok,
            "unbalanced, Laplacian cospectral, underlying graphs neither isomorphic nor cospectral",
            f"underlying polynomials {adjacency_poly(u1)} vs {adjacency_poly(u2)}")


def _check_subdivisions(rep: VerificationReport, tol: float) -> None:
    r5 = math.sqrt(5.0)
    lap = [0.0, 2.0, 3.0, 3.0, 3.0 + r5, 3.0 - r5]
    want = RealSpectrum.from_values(
        [0.0] * 10 + [2.0, -2.0] + [math.sqrt(6)] * 2 + [-math.sqrt(6)] * 2
        + [s * math.sqrt(6 + t * math.sqrt(20)) for s in (1, -1) for t in (1, -1)],
        tol,
    )
    got = predicted_sp_spectrum(lap, 6, 7, 2, balanced=True, tol=tol)
    rep.add("s_2 spectrum predicted from Laplacian {0,2,3,3,3+-sqrt5}", "subdivision-spectrum",
            got.matches(want, tol), want, got)

    cases = [(g, p) for g in _connected(4) for p in (1, 2, 3)]

    def sp_ok(case) -> bool:
        g, p = case
        lap = eigenvalues(laplacian_matrix(g), tol)
        pred = predicted_sp_spectrum(lap, g.n, g.m, p, is_balanced(g), tol)
        return eigenvalues(adjacency_matrix(s_p(g, p)), tol).matches(pred, tol)

    _sweep(rep, "s_p spectrum formula, connected n<=4, p in 1..3", "subdivision-spectrum",
           cases, sp_ok, lambda c: f"{c[0]} p={c[1]}")

    cases = [(g, p, k) for g in _connected(4) for p, k in ((1, 1), (1, 0), (2, 1), (2, 2))]

    def spk_ok(case) -> bool:
        g, p, k = case
        lap = eigenvalues(laplacian_matrix(g), tol)
        pred = predicted_spk_spectrum(lap, g.n, g.m, p, k, is_balanced(g), tol)
        return eigenvalues(adjacency_matrix(s_p_k(g, p, k)), tol).matches(pred, tol)

    _sweep(rep, "s_p_k spectrum formula, connected n<=4", "cloned-subdivision-spectrum",
           cases, spk_ok, lambda c: f"{c[0]} p={c[1]} k={c[2]}")

    f = path_pair_family(4)
    a, b = s_p(f.gamma1, 2), s_p(f.gamma1_tau, 2)
    same = adjacency_poly(a) == adjacency_poly(b)
    iso = signed_isomorphic(a, b)
    rep.add("s_2 of the path family n=4 transpose pair: cospectral, not isomorphic",
            "cospectral-subdivisions", same and iso is None,
            "equal adjacency polynomials, no isomorphism", f"equal={same}, isomorphism={iso}")

    k4 = complete_graph(4)
    s4 = s_p(k4, 4)
    roots = integer_roots(adjacency_poly(s4))
    want_roots = [4] * 3 + [0] * 22 + [-4] * 3
    rep.add("s_4 of balanced K4 integral", "integral-subdivisions", roots == want_roots,
            "{0^(22), +-4^(3)}", roots)
    rep.add("s_2 of balanced K4 not integral", "integral-subdivisions",
            not is_integral(s_p(k4, 2)), "not integral",
            "integral" if is_integral(s_p(k4, 2)) else "not integral")


def _check_energies(rep: VerificationReport, config: RunConfig, samples: int) -> None:
    tol = config.tolerance
    rng = np.random.default_rng(config.seed)
    graphs = [
        random_signed_graph(int(rng.integers(2, 7)), rng, density=0.5, connected=True)
        for _ in range(samples)
    ]

    def ok(g: SignedGraph) -> bool:
        base = energy(subdivision(g))
        for p in (2, 3, 4):
            if abs(energy(s_p(g, p)) - math.sqrt(p) * base) >= tol:
                return False
        for p, k in ((1, 1), (2, 1)):
            if abs(energy(s_p_k(g, p, k)) - math.sqrt((p + 1) * (k + 1)) * base) >= tol:
                return False
        return True

    _sweep(rep, f"energy scaling of s_p and s_p_k, {samples} seeded graphs", "energy-scaling",
           graphs, ok, str)

    c3 = cycle_graph(3, -1)
    sg = subdivision(c3)
    k2 = complete_graph(2)
    cart, kron = cartesian_product(sg, k2), kronecker_product(sg, k2)
    e1, e2 = energy(cart), energy(kron)
    ok3 = (adjacency_poly(cart) != adjacency_poly(kron)
           and abs(e1 - 16.0) < tol and abs(e2 - 16.0) < tol)
    rep.add("negative triangle: S x K2 and S (x) K2 noncospectral with energy 16",
            "equienergetic-products", ok3, "distinct polynomials, energies 16 and 16",
            f"energies {e1:.12g} and {e2:.12g}")

    unicyclic = [
        g for n in range(3, 7) for g in enumerate_signed_graphs(n, connected_only=True)
        if g.m == g.n and not is_balanced(g)
    ]
    _sweep(rep, "equienergetic criterion on unbalanced unicyclic graphs n<=6",
           "equienergetic-products", unicyclic,
           lambda g: equienergetic_subdivision_check(g, tol).consistent, str)


def _check_exhaustive(rep: VerificationReport, config: RunConfig) -> None:
    small = [g for n in range(1, 6) for g in enumerate_signed_graphs(n)]
    _sweep(rep, "TU expansion equals determinant, all graphs n<=5", "tu-expansion", small,
           lambda g: laplacian_charpoly_via_tu(g) == laplacian_poly(g), str)

    tiny = [g for n in range(1, 5) for g in enumerate_signed_graphs(n)]
    _sweep(rep, "symmetric spectrum iff cospectral with negation, n<=4", "symmetric-spectrum",
           tiny, lambda g: spectrum_symmetric(g) == cospectral(g, negate(g)), str)

    rng = np.random.default_rng(config.seed + 1)
    cases = []
    for _ in range(30):
        g = random_signed_graph(int(rng.integers(2, 9)), rng)
        X = [v for v in range(g.n) if rng.random() < 0.5]
        cases.append((g, X))
    _sweep(rep, "polynomials invariant under switching, 30 seeded cases",
           "switching-invariance", cases,
           lambda c: adjacency_poly(switch(*c)) == adjacency_poly(c[0])
           and laplacian_poly(switch(*c)) == laplacian_poly(c[0]),
           lambda c: f"{c[0]} X={c[1]}")

    pts = []
    for _ in range(30):
        g = random_signed_graph(2 * int(rng.integers(1, 5)), rng)
        pts.append((g, partial_transpose(g)))
    _sweep(rep, "partial transpose keeps the degree sum", "transpose-degree-sum", pts,
           lambda c: sum(c[0].degrees) == sum(c[1].degrees), lambda c: str(c[0]))


def verify_fixtures(config: RunConfig | None = None, energy_samples: int = 50) -> VerificationReport:
    """Run every fixture; failures are recorded as items, never raised."""
    config = config or RunConfig()
    rep = VerificationReport()
    _check_path_families(rep)
    _check_cycle_family(rep)
    _check_subdivisions(rep, config.tolerance)
    _check_energies(rep, config, energy_samples)
    _check_exhaustive(rep, config)
    return rep
