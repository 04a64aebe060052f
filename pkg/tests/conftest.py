"""Collects one verdict line per acceptance criterion for the terminal summary."""

_VERDICTS: list[tuple[int, str]] = []


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        item.user_properties.append(("criterion", marker.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.failed and report.when == "setup"):
        num, title = props["criterion"]
        details = "; ".join(v for k, v in report.user_properties if k == "detail")
        verdict = "PASS" if report.passed else "FAIL"
        line = f"criterion {num} {verdict}: {title}"
        _VERDICTS.append((num, line + (f" ({details})" if details else "")))


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_VERDICTS):
        terminalreporter.write_line(line)
