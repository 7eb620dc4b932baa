import os
from functools import lru_cache

import pytest

from ramsey56 import combined


@lru_cache(maxsize=None)
def built(q: int) -> combined.Construction:
    return combined.build(q)


@pytest.fixture(scope="session")
def construction():
    return built


# one line per acceptance criterion, printed after the run
ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("RAMSEY56_LONG_RUN") == "1":
        return
    skip = pytest.mark.skip(reason="long run; set RAMSEY56_LONG_RUN=1")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
