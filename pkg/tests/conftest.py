from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from flagsphere.complex import boundary_complex, from_facets  # noqa: E402
from flagsphere.constructions import delta_12_33, diamond, gamma1, gamma2  # noqa: E402


@pytest.fixture(scope="session")
def delta():
    return delta_12_33()


@pytest.fixture(scope="session")
def g1():
    return gamma1()


@pytest.fixture(scope="session")
def g2():
    return gamma2()


@pytest.fixture(scope="session")
def torus(g1):
    return boundary_complex(g1).compact()


@pytest.fixture(scope="session")
def octahedron():
    return diamond(3)


@pytest.fixture(scope="session")
def d4():
    return diamond(4)


def complex_from_words(words):
    facets = [w.split() for w in words]
    labels = sorted({x for f in facets for x in f})
    return from_facets(labels, facets)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


_acceptance: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    kw = report.keywords
    if "criterion" not in kw or "test_acceptance" not in report.nodeid:
        return
    n, title = _criterion_args.get(report.nodeid, (None, None))
    if n is not None:
        _acceptance[n] = (title, "PASS" if report.passed else "FAIL")


_criterion_args: dict[str, tuple[int, str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criterion_args[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        title, verdict = _acceptance[n]
        terminalreporter.write_line(f"{verdict}  criterion {n:2d}: {title}")
