import pytest

from ybsets.datum import build_datum
from ybsets.enumerate import enumerate_sfss
from ybsets.io import fixture_text, load_fixture, parse_basis
from ybsets.retraction import mpl


@pytest.fixture(scope="session")
def ex1():
    return load_fixture("example_5_1.ybe")


@pytest.fixture(scope="session")
def ex2():
    return load_fixture("example_5_2.ybe")


@pytest.fixture(scope="session")
def ex3():
    return load_fixture("example_5_3.ybe")


@pytest.fixture(scope="session")
def datum1(ex1):
    return build_datum(ex1.qs, ex1.basis)


@pytest.fixture(scope="session")
def datum2(ex2):
    return build_datum(ex2.qs, ex2.basis)


@pytest.fixture(scope="session")
def forced_basis(ex3):
    return parse_basis(fixture_text("example_5_3_forced.basis"), ex3.qs)


@pytest.fixture(scope="session")
def corpus():
    """Labelled square-free symmetric sets by order, n = 1..5."""
    return {n: list(enumerate_sfss(n)) for n in range(1, 6)}


@pytest.fixture(scope="session")
def corpus_mpl(corpus):
    return {n: [(qs, mpl(qs).level) for qs in sols] for n, sols in corpus.items()}


@pytest.fixture(scope="session")
def level2_corpus(corpus_mpl):
    """mpl-2 solutions of order at most 5."""
    return [qs for n in corpus_mpl for qs, lvl in corpus_mpl[n] if lvl == 2]


def pytest_terminal_summary(terminalreporter):
    reports = []
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if getattr(rep, "when", "call") == "call" or key == "error":
                if "test_acceptance.py::test_criterion_" in rep.nodeid:
                    reports.append(rep)
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for rep in sorted(reports, key=lambda r: r.nodeid):
        name = rep.nodeid.split("::")[-1].removeprefix("test_criterion_")
        num, _, label = name.partition("_")
        status = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"{status} criterion {num}: {label.replace('_', ' ')}")
