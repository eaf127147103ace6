import random

import pytest

from gsv import Graph, from_edges, generate


@pytest.fixture
def star3_center2() -> Graph:
    """The 3-vertex star drawn 1--2--3 (center vertex 2)."""
    return from_edges(3, [(1, 2), (2, 3)])


@pytest.fixture
def ring6() -> Graph:
    return generate("ring", 6)


@pytest.fixture
def k2() -> Graph:
    return generate("complete", 2)


def random_graph(rng: random.Random, n: int) -> Graph:
    """Uniform over all 2^(n(n-1)/2) labelled graphs on n vertices."""
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < 0.5
    ]
    return from_edges(n, edges)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One verdict line per acceptance check, after the normal summary."""
    verdicts: dict[str, str] = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            if outcome == "passed" and getattr(report, "when", "call") != "call":
                continue
            name = nodeid.split("::")[-1]
            if outcome != "passed" or name not in verdicts:
                verdicts[name] = "PASS" if outcome == "passed" else "FAIL"
    if verdicts:
        terminalreporter.write_sep("-", "acceptance")
        for name, verdict in verdicts.items():
            terminalreporter.write_line(f"{verdict}  {name}")
