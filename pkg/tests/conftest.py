import pytest

_ACCEPTANCE: dict[int, tuple[str, list[str], list[bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.when != "call" and rep.passed:
        return
    number, title = mark.args
    _, details, results = _ACCEPTANCE.setdefault(number, (title, [], []))
    details.extend(v for k, v in item.user_properties if k == "detail")
    results.append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, details, results = _ACCEPTANCE[number]
        status = "PASS" if all(results) else "FAIL"
        line = f"criterion {number} {status}: {title}"
        if details:
            line += " | " + "; ".join(details)
        terminalreporter.write_line(line)
