import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config.stash[CRITERIA] = {}


CRITERIA = pytest.StashKey[dict]()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    number, title = marker.args
    detail = dict(item.user_properties).get("detail", "")
    item.config.stash[CRITERIA][number] = (title, rep.passed, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(CRITERIA, {})
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(results):
        title, ok, detail = results[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
