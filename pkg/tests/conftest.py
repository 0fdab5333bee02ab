from __future__ import annotations

import acceptance_log


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(acceptance_log.LINES):
        terminalreporter.write_line(acceptance_log.LINES[k])
