import os

import pytest

from polyfun import build_ring, parse_ring_spec


def ring(text):
    return build_ring(parse_ring_spec(text))


@pytest.fixture
def R():
    return ring


def pytest_collection_modifyitems(config, items):
    if os.environ.get("POLYFUN_SLOW"):
        return
    skip = pytest.mark.skip(reason="set POLYFUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running exhaustive sweeps")
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    n, title = mark.args
    prev = _criteria.get(n, (title, True))
    _criteria[n] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line("%s criterion %2d: %s" % ("PASS" if ok else "FAIL", n, title))
