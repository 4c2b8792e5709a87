import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    reports = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                reports.append((rep.nodeid, "PASS" if outcome == "passed" else "FAIL"))
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, verdict in sorted(reports):
        terminalreporter.write_line(f"{verdict}  {nodeid.split('::')[-1]}")
