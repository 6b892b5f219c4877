import random

import pytest

from mdcolor.graph import build_graph, complete_multipartite, cycle_graph


def bowtie():
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def c5_with_pendant():
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k23():
    return complete_multipartite([2, 3])


# acceptance results, one entry per criterion part: (number, part, ok, seconds)
ACCEPTANCE: list[tuple[int, str, bool, float]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    by_number: dict[int, list] = {}
    for entry in ACCEPTANCE:
        by_number.setdefault(entry[0], []).append(entry)
    for number in sorted(by_number):
        parts = by_number[number]
        ok = all(p[2] for p in parts)
        seconds = sum(p[3] for p in parts)
        names = ", ".join(p[1] + ("" if p[2] else " FAILED") for p in parts)
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  ({seconds:.1f} s)  {names}")
