import itertools

import pytest
from hypothesis import strategies as st

from signed_spectra import build_graph, cycle_graph
from signed_spectra._kernels import available_backends


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


@pytest.fixture
def c3neg():
    return cycle_graph(3, -1)


@st.composite
def signed_graphs(draw, min_n=0, max_n=7, connected=False):
    """Random signed graph; with ``connected`` a random spanning tree is forced in."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    choice = draw(st.lists(st.sampled_from((0, 1, -1)), min_size=len(pairs), max_size=len(pairs)))
    edges = {p: s for p, s in zip(pairs, choice) if s}
    if connected:
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.setdefault((u, v), draw(st.sampled_from((1, -1))))
    return build_graph(n, [(u, v, s) for (u, v), s in edges.items()])


def all_labelled_signed_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, -1), repeat=len(pairs)):
        yield build_graph(n, [(u, v, s) for (u, v), s in zip(pairs, choice) if s])


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome.upper()
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.failed:
        _acceptance[report.nodeid.split("::")[-1]] = "ERROR"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        word = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{word}  {name}")
