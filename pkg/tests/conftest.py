from collections import OrderedDict

_CRITERIA: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        item.user_properties.append(("criterion", marker.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    number, title = props["criterion"]
    entry = _CRITERIA.setdefault(number, {"title": title, "failed": [], "ran": 0})
    if report.when == "call" or report.failed:
        entry["ran"] += report.when == "call"
        if report.failed:
            entry["failed"].append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"criterion {number}: {status}  {entry['title']}"
        if entry["failed"]:
            line += "  [failed: " + ", ".join(entry["failed"]) + "]"
        terminalreporter.write_line(line)
