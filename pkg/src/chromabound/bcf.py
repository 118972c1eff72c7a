"""Exact chromatic-polynomial machinery on concrete graphs.

Two independent routes to P_G(q) live here: deletion-contraction, and the
expansion over broken-circuit-free (BCF) forests. The polymer-gas form and
the Penrose identity connect the two through signed sums over connected
spanning subgraphs.

Forests are tuples of edge indices into ``G.edges``; an edge with a larger
index is larger in the order used to define broken circuits.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Complex, Rational
from typing import Iterable, Sequence

from chromabound import caps
from chromabound.graph import Graph, contract_edge, delete_edge
from chromabound.polynomial import IntPolynomial, ONE, Q


class NotAForestError(ValueError):
    """An edge set passed as a forest contains a cycle."""


class SingularRatioError(ArithmeticError):
    """F_{V-u}(z) vanishes (numerically) at the requested point."""


@dataclass(frozen=True)
class ForestRecord:
    """A BCF forest given by its edge indices (sorted)."""

    edges: tuple[int, ...]
    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.edges)


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


# ---------------------------------------------------------------------------
# deletion-contraction oracle


def _canonical_key(G: Graph) -> tuple:
    """Relabel by iterated degree refinement, ties broken by vertex id.

    Not an isomorphism invariant in general: two isomorphic graphs may get
    different keys (a cache miss), but equal keys always mean equal graphs,
    because the key is the relabelled edge set itself.
    """
    adj = G.adjacency
    colors = [len(adj[v]) for v in range(G.n)]
    for _ in range(G.n):
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(G.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    order = sorted(range(G.n), key=lambda v: (colors[v], v))
    pos = {v: i for i, v in enumerate(order)}
    edges = sorted(tuple(sorted((pos[u], pos[v]))) for u, v in G.edges)
    return (G.n, tuple(edges))


def _falling(n: int) -> IntPolynomial:
    p = ONE
    for k in range(n):
        p = p * (Q - k)
    return p


def chromatic_dc(G: Graph, max_edges: int | None = None) -> IntPolynomial:
    """Chromatic polynomial by deletion-contraction with memoisation."""
    caps.check_edges(G.m, max_edges, caps.DEFAULT_DC_EDGES, "chromatic_dc")
    memo: dict[tuple, IntPolynomial] = {}
    return _dc(G, memo)


def _dc(G: Graph, memo: dict) -> IntPolynomial:
    if G.m == 0:
        return IntPolynomial.monomial(G.n)
    comps = G.components()
    if len(comps) > 1:
        p = ONE
        for comp in comps:
            p = p * _dc(G.induced(comp), memo)
        return p
    n, m = G.n, G.m
    if m == n - 1:
        return Q * (Q - 1) ** (n - 1)
    if 2 * m == n * (n - 1):
        return _falling(n)
    key = _canonical_key(G)
    hit = memo.get(key)
    if hit is not None:
        return hit
    degs = [G.degree(v) for v in range(n)]
    leaf = next((v for v in range(n) if degs[v] == 1), None)
    if leaf is not None:
        rest = G.induced([v for v in range(n) if v != leaf])
        result = (Q - 1) * _dc(rest, memo)
    else:
        v = min(range(n), key=lambda x: (degs[x], x))
        w = min(G.adjacency[v])
        e = G.index_of((v, w))
        result = _dc(delete_edge(G, e), memo) - _dc(contract_edge(G, e), memo)
    memo[key] = result
    return result


# ---------------------------------------------------------------------------
# polymer gas


def _check_polymer(G: Graph, R: Iterable[int]) -> Graph:
    R = sorted(set(R))
    if len(R) < 2:
        raise ValueError("a polymer needs at least two vertices")
    H = G.induced(R)
    if not H.is_connected():
        raise ValueError(f"vertex set {R} does not induce a connected subgraph")
    return H


def css_signed_sum(G: Graph, R: Iterable[int], max_edges: int | None = None) -> int:
    """Sum of (-1)^|E_g| over connected spanning subgraphs g of G restricted to R.

    Exhaustive over all edge subsets of the induced subgraph.
    """
    H = _check_polymer(G, R)
    caps.check_edges(H.m, max_edges, caps.DEFAULT_BCF_EDGES, "css_signed_sum")
    return _css(H)


@lru_cache(maxsize=65536)
def _css(H: Graph) -> int:
    n, edges = H.n, H.edges
    m = len(edges)
    total = 0
    for mask in range(1 << m):
        k = mask.bit_count()
        if k < n - 1:
            continue
        dsu = _DSU(n)
        pieces = n
        for i in range(m):
            if mask >> i & 1:
                if dsu.union(*edges[i]):
                    pieces -= 1
        if pieces == 1:
            total += -1 if k & 1 else 1
    return total


def _exact(q):
    if isinstance(q, Rational):
        return Fraction(q)
    if isinstance(q, Complex):
        return q
    raise TypeError(f"unsupported value type {type(q).__name__}")


def activity(G: Graph, R: Iterable[int], q) -> Fraction | complex:
    """Polymer activity: css_signed_sum(G, R) / q^(|R|-1)."""
    R = sorted(set(R))
    q = _exact(q)
    if q == 0:
        raise ZeroDivisionError("activity is undefined at q = 0")
    return css_signed_sum(G, R) / q ** (len(R) - 1)


def connected_subsets(G: Graph, min_size: int = 2, max_size: int | None = None) -> list[tuple[int, ...]]:
    """All vertex subsets inducing a connected subgraph, by bitmask scan."""
    n = G.n
    top = n if max_size is None else min(max_size, n)
    adjmask = [sum(1 << w for w in G.adjacency[v]) for v in range(n)]
    out = []
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size < min_size or size > top:
            continue
        low = mask & -mask
        reach = low
        frontier = low
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = adjmask[v] & mask & ~reach
            reach |= new
            frontier |= new
        if reach == mask:
            out.append(tuple(v for v in range(n) if mask >> v & 1))
    return out


def xi_polymer(G: Graph, q, max_vertices: int | None = None) -> Fraction | complex:
    """Polymer-gas partition function by recursion on the lowest free vertex.

    Xi(U) = Xi(U - v) + sum over connected R with v in R subset of U of
    z(R) * Xi(U - R), which enumerates every set of disjoint polymers once.
    """
    cap = caps.DEFAULT_POLYMER_VERTICES if max_vertices is None else max_vertices
    if G.n > cap:
        raise caps.SizeLimitError(f"xi_polymer: {G.n} vertices exceeds the cap of {cap}")
    q = _exact(q)
    if q == 0:
        raise ZeroDivisionError("xi_polymer is undefined at q = 0")
    by_low: dict[int, list[tuple[int, object]]] = {}
    for R in connected_subsets(G):
        mask = sum(1 << v for v in R)
        z = css_signed_sum(G, R) / q ** (len(R) - 1)
        by_low.setdefault(R[0], []).append((mask, z))

    memo: dict[int, object] = {0: Fraction(1) if isinstance(q, Fraction) else 1}

    def xi(mask: int):
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        total = xi(mask & ~(1 << v))
        for pm, z in by_low.get(v, ()):
            if pm & mask == pm:
                total += z * xi(mask & ~pm)
        memo[mask] = total
        return total

    return xi((1 << G.n) - 1)


# ---------------------------------------------------------------------------
# broken-circuit-free forests


def _forest_adjacency(G: Graph, tau: Sequence[int]) -> dict[int, list[tuple[int, int]]]:
    adj: dict[int, list[tuple[int, int]]] = {}
    for i in tau:
        u, v = G.edges[i]
        adj.setdefault(u, []).append((v, i))
        adj.setdefault(v, []).append((u, i))
    return adj


def _path_max(adj: dict[int, list[tuple[int, int]]], x: int, y: int) -> int:
    """Largest edge index on the forest path from x to y (both in one tree)."""
    best = {x: -1}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        if a == y:
            return best[a]
        for b, i in adj.get(a, ()):
            if b not in best:
                best[b] = max(best[a], i)
                queue.append(b)
    raise AssertionError("vertices are not in the same tree")


def is_bcf(G: Graph, tau: Iterable[int]) -> bool:
    """True iff the forest tau contains no broken circuit.

    Equivalently, no edge {x, y} outside tau joining two vertices of one tree
    is larger than every edge on the tree path between x and y.
    """
    tau = sorted(set(tau))
    for i in tau:
        if not 0 <= i < G.m:
            raise ValueError(f"unknown edge index {i}")
    dsu = _DSU(G.n)
    for i in tau:
        if not dsu.union(*G.edges[i]):
            raise NotAForestError(f"edge set {tau} contains a cycle")
    return _bcf_given_forest(G, tau, dsu)


def _bcf_given_forest(G: Graph, tau: Sequence[int], dsu: _DSU) -> bool:
    in_tau = set(tau)
    adj = None
    for j, (x, y) in enumerate(G.edges):
        if j in in_tau or dsu.find(x) != dsu.find(y):
            continue
        if adj is None:
            adj = _forest_adjacency(G, tau)
        if j > _path_max(adj, x, y):
            return False
    return True


def enumerate_bcf_forests(G: Graph, max_edges: int | None = None) -> list[ForestRecord]:
    """Every BCF forest of G, the empty one included.

    BCF forests are closed under taking subsets, so a depth-first search
    adding edges in increasing index order can prune as soon as a partial
    forest fails. Output is sorted by size, then lexicographically.
    """
    caps.check_edges(G.m, max_edges, caps.DEFAULT_BCF_EDGES, "enumerate_bcf_forests")
    found: list[tuple[int, ...]] = []
    edges = G.edges

    def extend(current: list[int], start: int) -> None:
        found.append(tuple(current))
        for i in range(start, len(edges)):
            current.append(i)
            dsu = _DSU(G.n)
            ok = all(dsu.union(*edges[j]) for j in current)
            if ok and _bcf_given_forest(G, current, dsu):
                extend(current, i + 1)
            current.pop()

    extend([], 0)
    found.sort(key=lambda t: (len(t), t))
    return [
        ForestRecord(t, frozenset(x for i in t for x in edges[i]))
        for t in found
    ]


@lru_cache(maxsize=4096)
def _forest_counts(G: Graph) -> tuple[int, ...]:
    counts = [0] * G.n if G.n else [0]
    for rec in enumerate_bcf_forests(G):
        counts[rec.size] += 1
    return tuple(counts)


def forest_gf(G: Graph) -> IntPolynomial:
    """F_G(z): coefficient of z^k is the number of BCF forests with k edges."""
    caps.check_edges(G.m, None, caps.DEFAULT_BCF_EDGES, "forest_gf")
    if G.n == 0:
        return ONE
    return IntPolynomial(_forest_counts(G))


def chromatic_whitney(G: Graph) -> IntPolynomial:
    """P_G(q) = q^|V| * F_G(-1/q), expanded as an integer polynomial."""
    F = forest_gf(G)
    out = [0] * (G.n + 1)
    for k, c in enumerate(F.coeffs):
        out[G.n - k] += -c if k & 1 else c
    return IntPolynomial(tuple(out))


def ratio_polynomials(G: Graph, u: int) -> tuple[IntPolynomial, IntPolynomial]:
    """(F_V, F_{V-u}) as exact integer polynomials."""
    if not 0 <= u < G.n:
        raise ValueError(f"unknown vertex {u}")
    return forest_gf(G), forest_gf(G.induced(v for v in range(G.n) if v != u))


SINGULAR_TOL = 1e-12


def ratio_R_u(G: Graph, u: int, z: complex) -> complex:
    """R^u_G(z) = F_V(z) / F_{V-u}(z) - 1, zero for a single-vertex graph."""
    if G.n == 1:
        if u != 0:
            raise ValueError(f"unknown vertex {u}")
        return 0j
    num, den = ratio_polynomials(G, u)
    return evaluate_ratio(num, den, z)


def evaluate_ratio(num: IntPolynomial, den: IntPolynomial, z: complex) -> complex:
    z = complex(z)
    a, b = num(z), den(z)
    if abs(b) < SINGULAR_TOL * (1 + abs(a)):
        raise SingularRatioError(f"F_(V-u) vanishes near z = {z}")
    return a / b - 1


def bcf_spanning_tree_count(G: Graph, R: Iterable[int]) -> int:
    H = G.induced(R)
    return sum(1 for rec in enumerate_bcf_forests(H) if rec.size == H.n - 1)


def penrose_check(G: Graph, R: Iterable[int]) -> bool:
    """Penrose identity for the minimal-tree scheme on G restricted to R.

    The signed sum over connected spanning subgraphs must equal
    (-1)^(|R|-1) times the number of BCF spanning trees; both sides are
    computed by separate enumerations.
    """
    R = sorted(set(R))
    lhs = css_signed_sum(G, R)
    sign = -1 if (len(R) - 1) & 1 else 1
    return lhs == sign * bcf_spanning_tree_count(G, R)


def bcf_trees_containing(G: Graph, u: int) -> list[ForestRecord]:
    """Non-empty BCF trees of G whose vertex set contains u."""
    out = []
    for rec in enumerate_bcf_forests(G):
        if rec.size and u in rec.vertices and len(rec.vertices) == rec.size + 1:
            out.append(rec)
    return out


def forests_anchored_at(G: Graph, S: Iterable[int]) -> list[ForestRecord]:
    """BCF forests each of whose trees meets S (the empty forest included)."""
    S = set(S)
    out = []
    for rec in enumerate_bcf_forests(G):
        dsu = _DSU(G.n)
        for i in rec.edges:
            dsu.union(*G.edges[i])
        roots = {dsu.find(v) for v in rec.vertices}
        hit = {dsu.find(v) for v in S if v in rec.vertices}
        if roots == hit:
            out.append(rec)
    return out
