import pytest

from skewbrace import op_brace, trivial_brace
from skewbrace.constructions import enumerate_braces
from skewbrace.groups import cyclic_group, symmetric_group_s3

A3 = (0, 1, 2)
S3_ALL = (0, 1, 2, 3, 4, 5)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group_s3()


@pytest.fixture(scope="session")
def triv_s3(s3):
    return trivial_brace(s3)


@pytest.fixture(scope="session")
def op_s3(s3):
    return op_brace(s3)


@pytest.fixture(scope="session")
def z3_brace():
    return trivial_brace(cyclic_group(3))


@pytest.fixture(scope="session")
def corpus():
    """One brace per isomorphism class, orders 1..6."""
    return [b for n in range(1, 7) for b in enumerate_braces(n)]


# -- acceptance summary -------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    k, title = marker
    ok, titles = _criteria.get(k, (True, title))
    _criteria[k] = (ok and report.passed, titles)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        ok, title = _criteria[k]
        terminalreporter.write_line(f"criterion {k} ({title}): {'PASS' if ok else 'FAIL'}")
