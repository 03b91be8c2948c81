import random

import pytest

from cubediam.cube import SUPPORTED, apply_move, get_metric, solved_state
from cubediam.graph import CubeGraph, bfs_distance_array

ENUMERABLE = [(3, "square-slice"), (2, "square"), (2, "quarter"), (3, "square")]


def random_state(metric, rng, length=30):
    s = solved_state(metric.cube_size)
    for _ in range(length):
        s = apply_move(s, rng.choice(metric.generators))
    return s


@pytest.fixture(scope="session")
def distance_arrays():
    """BFS distance arrays of the four enumerable metrics, computed once."""
    return {key: bfs_distance_array(CubeGraph(get_metric(*key))) for key in ENUMERABLE}


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(params=SUPPORTED, ids=lambda p: f"{p[0]}-{p[1]}")
def metric(request):
    return get_metric(*request.param)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion and assert it."""

    def check(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
