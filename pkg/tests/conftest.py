_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, label): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    mark = _CRITERIA.get(report.nodeid)
    if mark is None:
        return
    number, label, _ = mark
    _CRITERIA[report.nodeid] = (number, label, report.outcome)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _CRITERIA[item.nodeid] = (m.args[0], m.args[1], None)


def pytest_terminal_summary(terminalreporter):
    ran = [v for v in _CRITERIA.values() if v[2] is not None]
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, outcome in sorted(ran):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {label}")
