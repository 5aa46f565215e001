import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(tag, text): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and (rep.when == "call" or rep.failed):
        tag, text = mark.args
        callspec = getattr(item, "callspec", None)
        if callspec is not None:
            tag = f"{tag}[{callspec.id}]"
        _results.setdefault(item.nodeid, ((tag, text), rep.outcome))
        if rep.failed:
            _results[item.nodeid] = ((tag, text), "failed")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (tag, text), outcome in sorted(_results.values(), key=lambda v: v[0][0]):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {tag}: {text}")
