import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_criteria: dict[str, list[str]] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    label = str(marker.args[0])
    if call.excinfo is None:
        verdict = "PASS"
    elif hasattr(item, "wasxfail") or item.get_closest_marker("xfail"):
        verdict = "FAIL (expected, see ledger)"
    else:
        verdict = "FAIL"
    _criteria.setdefault(label, []).append(verdict)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: (int("".join(c for c in s if c.isdigit())), s)):
        verdicts = _criteria[label]
        worst = next((v for v in verdicts if v != "PASS"), "PASS")
        terminalreporter.write_line(f"criterion {label}: {worst}")
