import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, independent of capture."""
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" not in nodeid or getattr(rep, "when", "call") != "call":
                continue
            m = re.search(r"test_criterion_(\d+)", nodeid)
            if not m:
                continue
            num = int(m.group(1))
            ok = status == "passed"
            results[num] = results.get(num, True) and ok
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(results):
        verdict = "PASS" if results[num] else "FAIL"
        terminalreporter.write_line("acceptance criterion %2d: %s" % (num, verdict))
