import pytest

_results: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or not (report.when == "call" or report.failed):
        return
    number, title = mark.args
    entry = _results.setdefault(number, {"title": title, "ok": True, "notes": []})
    entry["ok"] = entry["ok"] and report.passed
    entry["notes"].extend(v for k, v in item.user_properties if k == "note")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        status = "PASS" if entry["ok"] else "FAIL"
        notes = f" ({'; '.join(entry['notes'])})" if entry["notes"] else ""
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['title']}{notes}")
