import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance")
        for result in sorted(RESULTS, key=lambda r: r.number):
            terminalreporter.write_line(result.line())
