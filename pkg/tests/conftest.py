import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypergraphic.hypergraph import new_hypergraph  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def K2():
    return new_hypergraph(2, [[1, 2]])


@pytest.fixture
def point():
    return new_hypergraph(1, [])


@pytest.fixture
def path3():
    return new_hypergraph(3, [[1, 2], [2, 3]])


def pytest_terminal_summary(terminalreporter):
    verdicts: dict[str, bool] = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            name = report.nodeid.rsplit("::", 1)[-1]
            if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
                continue
            key = name.split("_")[2]
            ok = status == "passed" and report.when == "call"
            verdicts[key] = verdicts.get(key, True) and ok
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for key in sorted(verdicts, key=int):
            terminalreporter.write_line(f"criterion {key}: {'PASS' if verdicts[key] else 'FAIL'}")
