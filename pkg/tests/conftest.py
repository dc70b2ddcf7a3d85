import functools

import pytest
from hypothesis import HealthCheck, settings

from wqt.cartan import LieType, build_root_data
from wqt.engine import fundamental

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

# (type, node) pairs of the fundamental-field suite.
SUITE = (
    [("A", l, i) for l in range(1, 5) for i in range(1, l + 1)]
    + [("B", l, i) for l in (2, 3) for i in range(1, l + 1)]
    + [("C", l, i) for l in (2, 3) for i in range(1, l + 1)]
    + [("D", 4, i) for i in (1, 3, 4)]
    + [("G", 2, i) for i in (1, 2)]
)


def suite_ids():
    return [f"{s}{l}-node{i}" for s, l, i in SUITE]


@functools.lru_cache(maxsize=None)
def root(series: str, rank: int):
    return build_root_data(LieType(series, rank))


@functools.lru_cache(maxsize=None)
def fundamental_run(series: str, rank: int, node: int):
    return fundamental(root(series, rank), node)


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
