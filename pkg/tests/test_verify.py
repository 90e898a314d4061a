import pytest

from signed_spectra.search import RunConfig
from signed_spectra.verify import TOPICS, VerificationReport, verify_fixtures


@pytest.fixture(scope="module")
def report():
    return verify_fixtures(RunConfig(seed=0), energy_samples=20)


def test_every_topic_is_checked(report):
    assert report.coverage == set(TOPICS)


def test_item_lines(report):
    for item in report.items:
        line = item.line()
        assert line.startswith("[PASS]" if item.passed else "[FAIL]")
        assert item.name in line


def test_report_bookkeeping():
    rep = VerificationReport()
    assert rep.passed and rep.coverage == set()
    rep.add("a", "energy-scaling", True, 1, 1)
    rep.add("b", "energy-scaling", False, 1, 2)
    assert not rep.passed and [i.name for i in rep.failures()] == ["b"]


def test_cospectrality_claims_hold(report):
    # the cospectral-and-non-isomorphic verdicts, as opposed to printed coefficient data
    names = [i.name for i in report.items if not i.passed and "polynomial" not in i.name]
    assert names == []


def test_all_items_pass(report):
    assert report.failures() == [], "\n".join(i.line() for i in report.failures())
