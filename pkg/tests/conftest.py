import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


_criteria: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    title = dict(report.user_properties).get("criterion", "")
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        num = report.nodeid.rsplit("_", 1)[-1]
        _criteria[num] = ("PASS" if report.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        status, title = _criteria[num]
        terminalreporter.write_line(f"criterion {int(num):2d}: {status}  {title}")
