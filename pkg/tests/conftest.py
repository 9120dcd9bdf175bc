import pytest

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion.

    The number comes from the ``criterion`` marker. Call ``criterion(detail)``
    after the assertions; a test that fails first stays marked FAIL.
    """
    number = request.node.get_closest_marker("criterion").args[0]
    ACCEPTANCE.setdefault(number, ("FAIL", request.node.name))

    def record(detail: str) -> None:
        ACCEPTANCE[number] = ("PASS", detail)

    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call" and rep.failed:
        ACCEPTANCE[marker.args[0]] = ("FAIL", item.name + ": " + str(rep.longrepr).splitlines()[-1])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{status}] criterion {n:2d}: {detail}")
