from pathlib import Path

import pytest

from lefrank.cohomology import SymplecticData
from lefrank.constructions import catalog, chevalley_eilenberg, projective_space

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def kt():
    return SymplecticData.of(chevalley_eilenberg(catalog("kodaira-thurston")), "omega")


@pytest.fixture(scope="session")
def filiform():
    return SymplecticData.of(chevalley_eilenberg(catalog("n6-filiform")), "omega")


@pytest.fixture(scope="session")
def cp():
    def make(n):
        return SymplecticData.of(projective_space(n), "h")
    return make


@pytest.fixture
def data_dir():
    return DATA


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")
    config._criteria = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    table = item.config._criteria
    failed = call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception)
    n, text = mark.args
    prev = table.get(n, (text, True))
    table[n] = (text, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter, config):
    table = getattr(config, "_criteria", {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(table):
        text, ok = table[n]
        terminalreporter.write_line("criterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", text))
