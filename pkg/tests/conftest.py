import json
from pathlib import Path

import pytest

from bettilab.cli import parse_diagram
from bettilab.monomial import betti_table, random_squarefree

DATA = Path(__file__).resolve().parents[1] / "src" / "bettilab" / "data"

CRITERIA = {
    1: "ground truth: 7-cycle Betti table reproduced exactly",
    2: "Herzog-Kuhl exactness on 1000 random degree sequences",
    3: "Boij-Soderberg round trip on 200 corpus diagrams",
    4: "bound suite soundness on corpus and fixtures",
    5: "DG obstruction verdicts",
    6: "subadditivity suite on Caviglia d=2 and quadratic corpus",
    7: "Jacobian resolution verified for d = 2..6",
    8: "hypothesis-dependent statements reported as conditional only",
}

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _results.setdefault(n, []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n, desc in CRITERIA.items():
        if n not in _results:
            continue
        status = "PASS" if all(_results[n]) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status} - {desc}")


def load(name):
    return parse_diagram(DATA / name)


def load_json(name):
    return json.loads((DATA / name).read_text())


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def cycle7():
    return load("cycle7.json")


@pytest.fixture(scope="session")
def caviglia():
    return load("caviglia_d2.json")


@pytest.fixture(scope="session")
def caviglia_tau():
    return load("caviglia_d2_tau.json")


@pytest.fixture(scope="session")
def quartic():
    return load("quartic.json")


def corpus_params(count=200):
    """(n, r, seed, degree): 3..7 variables, 1..7 generators, every other member fixed degree 2."""
    out = []
    for k in range(count):
        n = 3 + k % 5
        r = 1 + (k // 5) % 7
        degree = 2 if k % 2 else None
        out.append((n, r, k, degree))
    return out


@pytest.fixture(scope="session")
def corpus():
    members = []
    for n, r, seed, degree in corpus_params():
        ideal = random_squarefree(n, r, seed, degree)
        members.append((ideal, betti_table(ideal)))
    return members
