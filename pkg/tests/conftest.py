import random

import pytest
from hypothesis import strategies as st

from robustgraphs.graph import build_directed, build_undirected

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    """Record one pass/fail line for the acceptance summary."""

    def _report(label: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}"
        if detail:
            line += f" -- {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_undirected_edges(rng: random.Random, n: int, p: float):
    return [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]


def random_arcs(rng: random.Random, n: int, p: float):
    return [(a, b) for a in range(n) for b in range(n) if a != b and rng.random() < p]


@st.composite
def undirected_graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_undirected(n, chosen)


@st.composite
def digraphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    arcs = [(a, b) for a in range(n) for b in range(n) if a != b]
    chosen = draw(st.lists(st.sampled_from(arcs), unique=True)) if arcs else []
    return build_directed(n, chosen)
