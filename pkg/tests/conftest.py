import os
import re
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_runtest_logreport(report):
    # One visible PASS/FAIL line per acceptance criterion.
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    match = re.search(r"test_criterion_(\d+)", report.nodeid)
    if match:
        status = "PASS" if report.passed else "FAIL"
        name = report.nodeid.split("::")[-1]
        print(f"\nCRITERION {match.group(1)}: {status}  [{name}]")
