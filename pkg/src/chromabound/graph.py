"""Simple undirected graphs with a total order on the edges.

The position of an edge in ``Graph.edges`` is its rank: later means larger.
That order is what the broken-circuit machinery compares against.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

INFINITY = math.inf

Girth = Union[int, float]  # an int >= 3, or INFINITY for forests
Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or query."""


class GraphFormatError(GraphError):
    """Malformed graph file; ``lineno`` is 1-based, or 0 for whole-file problems."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``labels`` optionally records the original vertex names from a file,
    indexed by dense id.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = []
        seen = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels must have one entry per vertex")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def index_of(self, e: Edge | int) -> int:
        """Position of an edge given as an index or an endpoint pair."""
        if isinstance(e, int):
            if not 0 <= e < self.m:
                raise GraphError(f"unknown edge index {e}")
            return e
        u, v = e
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise GraphError(f"unknown edge {tuple(e)}") from None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on ``keep``, relabelled in increasing vertex order.

        Surviving edges keep their relative order.
        """
        kept = sorted(set(keep))
        for v in kept:
            if not 0 <= v < self.n:
                raise GraphError(f"unknown vertex {v}")
        pos = {v: i for i, v in enumerate(kept)}
        edges = tuple((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        return Graph(len(kept), edges)

    def with_edge_order(self, order: Sequence[int]) -> Graph:
        """Same graph with edges listed as ``[edges[i] for i in order]``."""
        if sorted(order) != list(range(self.m)):
            raise GraphError("order must be a permutation of the edge indices")
        return Graph(self.n, tuple(self.edges[i] for i in order), self.labels)

    def reordered(self, policy: str = "input", seed: int | None = None) -> Graph:
        """Apply an edge-order policy: ``input``, ``lex`` or ``random``."""
        if policy == "input":
            return self
        if policy == "lex":
            return self.with_edge_order(sorted(range(self.m), key=lambda i: self.edges[i]))
        if policy == "random":
            order = list(range(self.m))
            random.Random(seed).shuffle(order)
            return self.with_edge_order(order)
        raise GraphError(f"unknown edge-order policy {policy!r}")


def max_degree(G: Graph) -> int:
    return max((len(a) for a in G.adjacency), default=0)


def girth(G: Graph) -> Girth:
    """Length of a shortest cycle, or INFINITY when G is a forest.

    One BFS per root; a non-tree edge (x, y) closes a closed walk of length
    dist[x] + dist[y] + 1 and the minimum over all roots is the girth.
    """
    best: Girth = INFINITY
    adj = G.adjacency
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def distance(G: Graph, v: int, w: int) -> Union[int, float]:
    """BFS edge count from v to w; INFINITY when they are disconnected."""
    for x in (v, w):
        if not 0 <= x < G.n:
            raise GraphError(f"unknown vertex {x}")
    if v == w:
        return 0
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in G.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == w:
                    return dist[y]
                queue.append(y)
    return INFINITY


def bfs_distances(G: Graph, v: int) -> dict[int, int]:
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in G.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def delete_edge(G: Graph, e: Edge | int) -> Graph:
    i = G.index_of(e)
    return Graph(G.n, G.edges[:i] + G.edges[i + 1:])


def contract_edge(G: Graph, e: Edge | int) -> Graph:
    """Merge the endpoints of e into the smaller one.

    Resulting self-loops are dropped and parallel edges collapse onto their
    first occurrence, so the result is simple. Vertices above the removed one
    shift down by one.
    """
    i = G.index_of(e)
    keep, gone = G.edges[i]

    def relabel(x: int) -> int:
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    edges = []
    seen = set()
    for j, (u, v) in enumerate(G.edges):
        if j == i:
            continue
        a, b = relabel(u), relabel(v)
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
    return Graph(G.n - 1, tuple(edges))


def _from_labelled(pairs: list[tuple[int, int, int]], extra: Iterable[int] = ()) -> Graph:
    labels = sorted({x for _, u, v in pairs for x in (u, v)} | set(extra))
    pos = {lab: i for i, lab in enumerate(labels)}
    seen: dict[tuple[int, int], int] = {}
    edges = []
    for lineno, u, v in pairs:
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        a, b = pos[u], pos[v]
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append((a, b))
    return Graph(len(labels), tuple(edges), tuple(labels))


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    One edge per line as two non-negative integers; '#' lines and blank
    lines are skipped. Labels are remapped to dense ids in increasing label
    order and kept in ``Graph.labels``.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two vertex ids, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"vertex ids must be integers, got {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"vertex ids must be non-negative, got {line!r}", lineno)
        pairs.append((lineno, u, v))
    return _from_labelled(pairs)


def serialize_edge_list(G: Graph) -> str:
    lines = [f"# n={G.n} m={G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """DIMACS ``.col``: a ``p edge n m`` header then 1-based ``e u v`` lines."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4 or n is not None:
                raise GraphFormatError(f"bad problem line {line!r}", lineno)
            try:
                n = int(parts[2])
            except ValueError:
                raise GraphFormatError(f"bad vertex count in {line!r}", lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before the 'p edge' header", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"bad edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise GraphFormatError(f"bad edge line {line!r}", lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in {line!r}", lineno)
            pairs.append((lineno, u, v))
        else:
            raise GraphFormatError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge n m' header")
    return _from_labelled(pairs, extra=range(n))


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".col"):
        return parse_dimacs(text)
    return parse_edge_list(text)
