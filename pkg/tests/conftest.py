import random

import pytest
from hypothesis import strategies as st

from f33turan.hypergraph import ThreeGraph


@st.composite
def three_graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    total = n * (n - 1) * (n - 2) // 6
    bits = draw(st.integers(0, (1 << total) - 1)) if total else 0
    return ThreeGraph(n, bits)


def random_graph(rng: random.Random, n: int, p: float) -> ThreeGraph:
    total = n * (n - 1) * (n - 2) // 6
    bits = 0
    for r in range(total):
        if rng.random() < p:
            bits |= 1 << r
    return ThreeGraph(n, bits)


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES: list[str] = []


def record_criterion(label: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"{label}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{label}: {detail}"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
