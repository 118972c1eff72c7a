import itertools

import pytest

from chromabound.graph import Graph


def count_colourings(G: Graph, q: int) -> int:
    """Proper q-colourings by brute force over all assignments."""
    total = 0
    for colours in itertools.product(range(q), repeat=G.n):
        if all(colours[u] != colours[v] for u, v in G.edges):
            total += 1
    return total


def simple_cycle_lengths(G: Graph) -> set[int]:
    """Lengths of all simple cycles, found by DFS from each cycle's smallest vertex."""
    found = set()
    for start in range(G.n):
        stack = [(start, [start])]
        while stack:
            v, path = stack.pop()
            for w in G.adjacency[v]:
                if w == start and len(path) >= 3:
                    found.add(len(path))
                elif w > start and w not in path:
                    stack.append((w, path + [w]))
    return found


@pytest.fixture
def triangle():
    return Graph(3, ((0, 1), (0, 2), (1, 2)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
