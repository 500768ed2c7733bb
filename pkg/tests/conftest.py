from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# filled by test_acceptance; echoed at the end of the session
CRITERION_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
