from collections import defaultdict

import pytest

from metacause import LtsGraph, corpus

# Transition names t1..t9 of the second example, mapped to rule ids.
T2 = {"t1": "(λ,μ)", "t2": "(β,γ)", "t3": "(ξ,θ)", "t4": "(ψ,ν)", "t7": "(ο,ι)",
      "t8": "(δ,η)", "t9": "(α,ζ)"}

_GRAPHS = {}


def graph(name: str) -> LtsGraph:
    if name not in _GRAPHS:
        _GRAPHS[name] = LtsGraph.from_network(*corpus.load(name))
    return _GRAPHS[name]


@pytest.fixture
def ex1():
    return graph("ex1")


@pytest.fixture
def ex2():
    return graph("ex2")


@pytest.fixture
def ex3m():
    return graph("ex3_modified")


@pytest.fixture
def glyco():
    return graph("glycolysis")


@pytest.fixture
def glyco_tpi():
    return graph("glycolysis_tpi")


@pytest.fixture
def glyco_sbeta():
    return graph("glycolysis_sbeta")


# -- acceptance reporting -------------------------------------------------------

_CRITERIA = defaultdict(list)
_NOTES = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = getattr(report, "criterion", None)
    if crit is not None:
        _CRITERIA[crit].append((report.nodeid.split("::")[-1], report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep.criterion = mark.args[0]
    for note in getattr(item, "acceptance_notes", ()):
        if rep.when == "call" and note not in _NOTES:
            _NOTES.append(note)


@pytest.fixture
def note(request):
    """Attach a line to the acceptance report."""
    request.node.acceptance_notes = []
    return request.node.acceptance_notes.append


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(_CRITERIA):
        results = _CRITERIA[crit]
        failed = [n for n, o in results if o != "passed"]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"criterion {crit}: {status} ({len(results) - len(failed)}/{len(results)})")
        for n in failed:
            tr.write_line(f"    failed: {n}")
    for line in _NOTES:
        tr.write_line(f"note: {line}")
