import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "dplfit",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("dplfit")


_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    lines = {}
    for outcome in ("passed", "failed", "error", "skipped"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", "call") != "call" and outcome != "skipped":
                continue
            match = _CRITERION.search(report.nodeid)
            if not match:
                continue
            num, name = int(match.group(1)), match.group(2).replace("_", " ")
            lines[num] = (name, outcome)
    if not lines:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(lines):
        name, outcome = lines[num]
        label = {"passed": "PASS", "failed": "FAIL", "error": "FAIL",
                 "skipped": "SKIP"}[outcome]
        terminalreporter.write_line(f"criterion {num} ({name}): {label}")
