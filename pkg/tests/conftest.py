"""Prints one verdict line per acceptance criterion at the end of a run."""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts = {}
    for outcome, flag in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(outcome, ()):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if flag == "PASS" and getattr(report, "when", "call") != "call":
                continue
            tail = nodeid.split("test_criterion_", 1)[1]
            number, _, label = tail.partition("_")
            if verdicts.get(number, (None,))[0] != "FAIL":
                verdicts[number] = (flag, label.replace("_", " "))
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        flag, label = verdicts[number]
        terminalreporter.write_line(f"criterion {number}: {flag} - {label}")
