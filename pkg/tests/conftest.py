import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("repo", derandomize=True)
settings.load_profile("repo")


def pytest_runtest_logreport(report):
    # the acceptance suite prints its PASS lines itself; mirror failures
    # so every criterion shows one pass/fail line either way
    if (
        report.when == "call"
        and report.failed
        and "test_acceptance" in report.nodeid
    ):
        name = report.nodeid.split("::")[-1]
        print(f"\n[acceptance] {name}: FAIL", file=sys.stderr)
