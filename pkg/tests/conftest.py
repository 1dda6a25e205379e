"""Shared pytest wiring.

Acceptance tests push one line each into a module-global list; the
terminal summary hook replays them at the end of the run so the
pass/fail ledger is visible in plain pytest output.
"""

_ACCEPTANCE: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE:
        terminalreporter.write_line(line)
