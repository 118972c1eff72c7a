"""Named small graphs and the exhaustive list of small connected graphs."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from chromabound.graph import Graph


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def wheel(rim: int) -> Graph:
    spokes = tuple((0, i) for i in range(1, rim + 1))
    ring = tuple((i, i % rim + 1) for i in range(1, rim + 1))
    return Graph(rim + 1, spokes + ring)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def cube() -> Graph:
    edges = [(v, v ^ (1 << k)) for v in range(8) for k in range(3) if v < v ^ (1 << k)]
    return Graph(8, tuple(edges))


def prism() -> Graph:
    return Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)))


def binary_tree(depth: int) -> Graph:
    n = 2 ** (depth + 1) - 1
    return Graph(n, tuple(((i - 1) // 2, i) for i in range(1, n)))


def named_graphs() -> dict[str, Graph]:
    graphs = {
        "K3": complete(3),
        "P3": path(3),
        "P5": path(5),
        "star4": star(4),
        "K4": complete(4),
        "K5": complete(5),
        "K2,3": complete_bipartite(2, 3),
        "K3,3": complete_bipartite(3, 3),
        "wheel5": wheel(5),
        "prism": prism(),
        "cube": cube(),
        "petersen": petersen(),
        "bintree2": binary_tree(2),
    }
    for n in range(4, 9):
        graphs[f"C{n}"] = cycle(n)
    return graphs


@lru_cache(maxsize=None)
def _atlas(max_n: int) -> tuple[Graph, ...]:
    import networkx as nx

    out = []
    for H in nx.graph_atlas_g():
        n = H.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(H):
            continue
        out.append(Graph(n, tuple(sorted(tuple(sorted(e)) for e in H.edges()))))
    return tuple(out)


def small_connected_graphs(max_n: int = 6, min_n: int = 1) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on min_n..max_n vertices."""
    if max_n > 7:
        raise ValueError("the graph atlas only covers up to 7 vertices")
    return [G for G in _atlas(max_n) if G.n >= min_n]


def corpus(small_max_n: int = 6) -> dict[str, Graph]:
    """Test corpus: named graphs plus every connected graph on 3..small_max_n vertices.

    Graphs with maximum degree 1 are left out: their certified radius is a
    supremum that their own root q = 1 sits on.
    """
    graphs = dict(named_graphs())
    for i, G in enumerate(small_connected_graphs(small_max_n, 3)):
        graphs[f"atlas{G.n}-{i}"] = G
    return graphs


def edge_orders(G: Graph, seed: int = 7) -> list[Graph]:
    """Input order, reversed order and a seeded shuffle distinct from both.

    The three are pairwise distinct whenever the graph has at least three edges.
    """
    forward = list(range(G.m))
    backward = forward[::-1]
    rng = random.Random(seed)
    shuffled = forward[1:] + forward[:1]
    for _ in range(100):
        candidate = forward[:]
        rng.shuffle(candidate)
        if candidate != forward and candidate != backward:
            shuffled = candidate
            break
    return [G, G.with_edge_order(backward), G.with_edge_order(shuffled)]
