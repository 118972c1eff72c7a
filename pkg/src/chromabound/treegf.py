"""Subtree generating functions.

Two sides: the series for rooted subtrees of the infinite (delta-1)-ary tree,
with its Lagrange-inversion coefficients and closed-form inverse, and exact
subtree counts on concrete graphs that those series dominate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from chromabound import caps
from chromabound.bounds import big_r_delta, check_delta
from chromabound.graph import Graph
from chromabound.polynomial import IntPolynomial

ROOTED_SUBTREE_CAP = 9


def u_coeff(delta: int, n: int) -> int:
    """Number of n-vertex rooted subtrees of the (delta-1)-ary tree.

    Lagrange inversion of u = x (1 + u)^(delta-1) gives
    ((delta-1) n)! / (n! ((delta-2) n + 1)!).
    """
    check_delta(delta, 2)
    if n < 1:
        raise ValueError("n must be >= 1")
    num = math.factorial((delta - 1) * n)
    den = math.factorial(n) * math.factorial((delta - 2) * n + 1)
    q, r = divmod(num, den)
    assert r == 0, "Lagrange coefficient is not an integer"
    return q


def count_rooted_subtrees(delta: int, n: int) -> int:
    """Brute-force count of n-vertex subtrees containing the root.

    Nodes of the rooted (delta-1)-ary tree are tuples of child indices;
    the search branches on including or excluding the first frontier node.
    """
    check_delta(delta, 3)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ROOTED_SUBTREE_CAP:
        raise caps.SizeLimitError(f"count_rooted_subtrees: n = {n} exceeds the cap of {ROOTED_SUBTREE_CAP}")
    k = delta - 1
    count = 0

    def grow(size: int, frontier: tuple) -> None:
        nonlocal count
        if size == n:
            count += 1
            return
        if not frontier:
            return
        node, rest = frontier[0], frontier[1:]
        grow(size + 1, rest + tuple(node + (i,) for i in range(k)))
        grow(size, rest)

    grow(1, tuple((i,) for i in range(k)))
    return count


@dataclass(frozen=True)
class SeriesPoint:
    """The small root u of u = x (1 + u)^(delta-1), and the series built on it."""

    delta: int
    x: float
    u: float

    @property
    def S(self) -> float:
        return (1.0 + self.u) ** self.delta

    @property
    def W(self) -> float:
        return (1.0 + self.u) ** (self.delta - 1)

    @property
    def W_star(self) -> float:
        return (1.0 + self.u) ** (self.delta - 2)

    @property
    def T(self) -> float:
        return self.x * self.S


def solve_u(delta: int, x: float) -> SeriesPoint:
    """Invert f(u) = u / (1+u)^(delta-1) on its increasing branch [0, 1/(delta-2)]."""
    check_delta(delta, 2)
    R = big_r_delta(delta)
    if not 0.0 <= x < R:
        raise ValueError(f"x must lie in [0, {R}), got {x!r}")
    if delta == 2:
        return SeriesPoint(delta, x, x / (1.0 - x))
    lo, hi = 0.0, 1.0 / (delta - 2)
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if mid / (1.0 + mid) ** (delta - 1) < x:
            lo = mid
        else:
            hi = mid
    return SeriesPoint(delta, x, 0.5 * (lo + hi))


def s_of_x(delta: int, x: float) -> float:
    return solve_u(delta, x).S


def w_of_x(delta: int, x: float) -> float:
    return solve_u(delta, x).W


def w_star_of_x(delta: int, x: float) -> float:
    return solve_u(delta, x).W_star


def subtree_polynomial(G: Graph, v: int, w: int | None = None, max_edges: int | None = None) -> IntPolynomial:
    """Count subtrees of G through v (and w, if given) by number of edges.

    Without w the single-vertex tree at v is included as the constant 1.
    Every subtree is grown from v exactly once by branching on whether the
    first boundary edge is taken.
    """
    caps.check_edges(G.m, max_edges, caps.DEFAULT_SUBTREE_EDGES, "subtree enumeration")
    for x in (v, w):
        if x is not None and not 0 <= x < G.n:
            raise ValueError(f"unknown vertex {x}")
    if w is not None and w == v:
        raise ValueError("v and w must differ")
    edges = G.edges
    incident: list[list[int]] = [[] for _ in range(G.n)]
    for i, (a, b) in enumerate(edges):
        incident[a].append(i)
        incident[b].append(i)
    counts = [0] * max(G.n, 1)

    def other(i: int, x: int) -> int:
        a, b = edges[i]
        return b if a == x else a

    def grow(verts: frozenset, size: int, boundary: list[int], excluded: frozenset) -> None:
        if not boundary:
            if w is None or w in verts:
                counts[size] += 1
            return
        e, rest = boundary[0], boundary[1:]
        a, b = edges[e]
        new = b if a in verts else a
        inside = verts | {new}
        nb = [f for f in rest if new not in edges[f]]
        nb += [f for f in incident[new] if f not in excluded and other(f, new) not in inside]
        grow(inside, size + 1, nb, excluded)
        grow(verts, size, rest, excluded | {e})

    grow(frozenset((v,)), 0, list(incident[v]), frozenset())
    return IntPolynomial(tuple(counts))


def t_graph_v(G: Graph, v: int, x):
    """Sum of x^|tau| over subtrees tau of G containing v (empty tree included)."""
    return subtree_polynomial(G, v)(x)


def t_graph_vw(G: Graph, v: int, w: int, x):
    """Sum of x^|tau| over subtrees containing both v and w; 0 if disconnected."""
    return subtree_polynomial(G, v, w)(x)
