import pytest

from skeinkit.fixtures import fixture, load_fixtures


@pytest.fixture(scope="session")
def records():
    return load_fixtures()


@pytest.fixture(scope="session")
def trefoil():
    return fixture("3_1")


@pytest.fixture(scope="session")
def figure8():
    return fixture("4_1")


CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    n, title = mark.args
    status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
    CRITERIA[n] = (status, rep.duration, title)
    print(f"\ncriterion {n}: {status} ({rep.duration:.1f} s) {title}")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        status, secs, title = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {status} ({secs:.1f} s) {title}")
