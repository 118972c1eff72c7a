"""Cross-module invariant suites run by ``chromabound selfcheck``.

Each suite returns a ``CheckResult``; a suite that raises is reported as a
failure carrying the exception text, so one broken module cannot hide the
others.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from chromabound import bcf, bounds, treegf
from chromabound.corpus import corpus, edge_orders, named_graphs
from chromabound.graph import INFINITY, Graph, bfs_distances, girth, max_degree
from chromabound.polynomial import IntPolynomial
from chromabound.roots import verify_zero_free

SLACK = 1e-9
MONOTONE_SLACK = 1e-12
TABLE_TOL = 1e-3

# (delta, g) -> (a*, b*, C/delta) for spot checks of the bound engine
TABLE_ANCHORS = {
    (3, 3): (0.39625, 1.57848, 4.55449),
    (20, 3): (0.33838, 1.45155, 5.72529),
    (3, 100): (0.45824, 5.81488, 2.49247),
}


@dataclass
class Level:
    name: str
    graphs: dict[str, Graph]
    orders: int
    penrose_size: int
    xi_points: tuple
    xi_max_vertices: int
    a_grid: tuple
    circle_points: int
    b_points: int
    delta_max_z: int
    girths_z: tuple
    delta_max_c: int
    grid: int


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = field(default=0.0)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


def make_level(name: str) -> Level:
    if name == "quick":
        return Level(
            name="quick",
            graphs=named_graphs(),
            orders=2,
            penrose_size=5,
            xi_points=(Fraction(2), Fraction(7, 3)),
            xi_max_vertices=8,
            a_grid=(0.3, 0.6, 0.9),
            circle_points=8,
            b_points=6,
            delta_max_z=12,
            girths_z=(3, 4, 5, 25, INFINITY),
            delta_max_c=12,
            grid=257,
        )
    if name == "full":
        return Level(
            name="full",
            graphs=corpus(),
            orders=3,
            penrose_size=7,
            xi_points=(Fraction(1), Fraction(2), Fraction(3), Fraction(-1), Fraction(7, 3)),
            xi_max_vertices=9,
            a_grid=tuple(k / 10 for k in range(1, 10)),
            circle_points=16,
            b_points=25,
            delta_max_z=30,
            girths_z=tuple(range(3, 13)) + (25, INFINITY),
            delta_max_c=50,
            grid=bounds.DEFAULT_GRID,
        )
    raise ValueError(f"unknown level {name!r}")


def _b_grid(delta: int, points: int) -> list[float]:
    rho = bounds.rho_delta(delta)
    top = rho * (1.0 - bounds.UPPER_GUARD) if rho < math.inf else 50.0
    return [1.0 + (top - 1.0) * k / points for k in range(1, points + 1)]


def _fail(bad: list, total: int, noun: str) -> tuple[bool, str]:
    if bad:
        return False, f"{len(bad)} of {total} {noun} failed, first: {bad[0]}"
    return True, f"{total} {noun}"


def check_penrose(level: Level) -> tuple[bool, str]:
    bad, total = [], 0
    for name, G in level.graphs.items():
        for R in bcf.connected_subsets(G, 2, level.penrose_size):
            total += 1
            if not bcf.penrose_check(G, R):
                bad.append((name, R))
    return _fail(bad, total, "vertex subsets")


def check_whitney(level: Level) -> tuple[bool, str]:
    bad, total = [], 0
    for name, G in level.graphs.items():
        reference = bcf.chromatic_dc(G)
        for k, H in enumerate(edge_orders(G)[: level.orders]):
            total += 1
            if bcf.chromatic_whitney(H) != reference:
                bad.append((name, k))
    return _fail(bad, total, "graph/order pairs")


def check_order_invariance(level: Level) -> tuple[bool, str]:
    bad, total = [], 0
    for name, G in level.graphs.items():
        variants = edge_orders(G) + [G.reordered("lex"), G.reordered("random", seed=11)]
        gfs = {bcf.forest_gf(H) for H in variants}
        total += 1
        if len(gfs) != 1:
            bad.append(name)
    return _fail(bad, total, "graphs")


def _sub(G: Graph, keep) -> Graph:
    return G.induced(sorted(keep))


def check_forest_recursion(level: Level) -> tuple[bool, str]:
    """Removing a vertex or a seed set splits F exactly into anchored trees and the rest."""
    z = IntPolynomial((0, 1))
    bad, total = [], 0
    for name, G in level.graphs.items():
        if G.m > (15 if level.name == "full" else 10):
            continue
        full = bcf.forest_gf(G)
        everyone = set(range(G.n))
        for u in range(G.n):
            acc = bcf.forest_gf(_sub(G, everyone - {u}))
            for rec in bcf.bcf_trees_containing(G, u):
                acc = acc + z ** rec.size * bcf.forest_gf(_sub(G, everyone - rec.vertices))
            total += 1
            if acc != full:
                bad.append((name, "vertex", u))
        seeds = {0, G.n - 1}
        acc = IntPolynomial(())
        for rec in bcf.forests_anchored_at(G, seeds):
            acc = acc + z ** rec.size * bcf.forest_gf(_sub(G, everyone - seeds - rec.vertices))
        total += 1
        if acc != full:
            bad.append((name, "seeds", tuple(sorted(seeds))))
    return _fail(bad, total, "decompositions")


def check_partition_function(level: Level) -> tuple[bool, str]:
    bad, total = [], 0
    for name, G in level.graphs.items():
        if G.n > level.xi_max_vertices:
            continue
        P = bcf.chromatic_dc(G)
        for q in level.xi_points:
            total += 1
            if q ** G.n * bcf.xi_polymer(G, q) != P(q):
                bad.append((name, str(q)))
    return _fail(bad, total, "graph/q pairs")


def check_ratio_bound(level: Level) -> tuple[bool, str]:
    bad, total, worst = [], 0, -math.inf
    radii: dict[tuple, list[float]] = {}
    for name, G in level.graphs.items():
        key = (max_degree(G), girth(G))
        if key not in radii:
            radii[key] = [float(bounds.z_delta_g(key[0], key[1], a)) for a in level.a_grid]
        den_cache = {}
        num = bcf.forest_gf(G)
        for u in range(G.n):
            if u not in den_cache:
                den_cache[u] = bcf.forest_gf(G.induced(v for v in range(G.n) if v != u))
            for a, r in zip(level.a_grid, radii[key]):
                for k in range(level.circle_points):
                    zpt = r * complex(math.cos(2 * math.pi * k / level.circle_points),
                                      math.sin(2 * math.pi * k / level.circle_points))
                    excess = abs(bcf.evaluate_ratio(num, den_cache[u], zpt)) - a
                    worst = max(worst, excess)
                    total += 1
                    if excess > SLACK:
                        bad.append((name, u, a, k))
    ok, detail = _fail(bad, total, "evaluations")
    return ok, f"{detail}; worst |R| - a = {worst:.3g}"


def check_zero_free(level: Level) -> tuple[bool, str]:
    bad, margins = [], []
    for name, G in level.graphs.items():
        report = verify_zero_free(G, name, grid=level.grid)
        margins.append(report.margin)
        if not report.passed:
            bad.append((name, report.margin))
    ok, detail = _fail(bad, len(margins), "graphs")
    return ok, f"{detail}; smallest margin {min(margins):.4g}"


def _path_count_ok(poly: IntPolynomial, delta: int, d: int) -> bool:
    # the two-point bound is only valid when v and w are joined by at most
    # (delta-1)^(d-1) shortest paths; see the README
    return poly[d] <= (delta - 1) ** (d - 1)


def check_tree_bounds(level: Level) -> tuple[bool, str]:
    bad, total, skipped = [], 0, 0
    for name, G in level.graphs.items():
        delta = max_degree(G)
        if delta < 2:
            continue
        bs = _b_grid(delta, level.b_points)
        xs = [bounds.x_delta(delta, b) for b in bs]
        for v in range(G.n):
            single = treegf.subtree_polynomial(G, v)
            for b, x in zip(bs, xs):
                total += 1
                if single(x) > b + SLACK:
                    bad.append((name, v, "single", b))
            dist = bfs_distances(G, v)
            for w, d in dist.items():
                if w == v:
                    continue
                pair = treegf.subtree_polynomial(G, v, w)
                if not _path_count_ok(pair, delta, d):
                    skipped += 1
                    continue
                for b, x in zip(bs, xs):
                    total += 1
                    if pair(x) > b * bounds.f_d_delta(delta, d, b) + SLACK:
                        bad.append((name, v, w, b))
    ok, detail = _fail(bad, total, "evaluations")
    return ok, f"{detail}; {skipped} pairs with too many shortest paths left out"


def check_series(level: Level) -> tuple[bool, str]:
    bad = []
    for delta in range(2, 31):
        n_b = 50 if level.name == "full" else 10
        for b in _b_grid(delta, n_b + 1)[:-1]:
            S = treegf.s_of_x(delta, bounds.x_delta(delta, b))
            if abs(S - b) >= 1e-10:
                bad.append(("S(x(b))", delta, b))
    for delta in (3, 4, 5):
        for n in range(1, 9 if level.name == "full" else 6):
            if treegf.u_coeff(delta, n) != treegf.count_rooted_subtrees(delta, n):
                bad.append(("u_n", delta, n))
    for x in np.linspace(0.0, 0.9, 10):
        pt = treegf.solve_u(2, float(x))
        if abs(pt.u - x / (1 - x)) > 1e-12 or abs(pt.S - 1 / (1 - x) ** 2) > 1e-12 * pt.S:
            bad.append(("delta=2", float(x)))
    for delta in (3, 5, 10):
        for frac in (0.2, 0.5, 0.9):
            pt = treegf.solve_u(delta, frac * bounds.big_r_delta(delta))
            if abs(pt.T - (pt.u + pt.u ** 2)) > 1e-12 * (1 + pt.T):
                bad.append(("T=u+u^2", delta, frac))
    return (False, f"{len(bad)} mismatches, first: {bad[0]}") if bad else (True, "all series identities hold")


def check_z_monotone(level: Level) -> tuple[bool, str]:
    a = np.linspace(0.05, 0.95, 19)
    cache: dict[tuple, np.ndarray] = {}

    def z(d, g):
        if (d, g) not in cache:
            cache[(d, g)] = np.asarray(bounds.z_delta_g(d, g, a))
        return cache[(d, g)]

    bad = []
    for d in range(1, level.delta_max_z + 1):
        for g in level.girths_z:
            if np.any(z(d, g) < z(d + 1, g) - MONOTONE_SLACK):
                bad.append(("delta", d, g))
            if g != INFINITY and np.any(z(d, g) > z(d, g + 1) + MONOTONE_SLACK):
                bad.append(("girth", d, g))
            if np.any(z(d, g) > z(d, INFINITY) + MONOTONE_SLACK):
                bad.append(("infinite girth", d, g))
    return _fail(bad, len(cache), "z curves compared")


def check_c_over_delta(level: Level) -> tuple[bool, str]:
    bad = []
    for g in (3, 4, 5, 10):
        kg = bounds.k_g_jpr(g, grid=level.grid)
        prev = -math.inf
        for d in range(3, level.delta_max_c + 1):
            cd = bounds.c_delta_g(d, g, grid=level.grid).C_over_delta
            if cd < prev - 1e-6:
                bad.append(("not nondecreasing", d, g))
            if cd > kg + 1e-6:
                bad.append(("above K_g", d, g))
            prev = cd
    return _fail(bad, 4 * (level.delta_max_c - 2), "(delta, g) pairs")


def check_bound_engine(level: Level) -> tuple[bool, str]:
    bad = []
    for (d, g), (a_ref, b_ref, c_ref) in TABLE_ANCHORS.items():
        res = bounds.c_delta_g(d, g, grid=level.grid)
        got = (res.a_star, res.b_star, res.C_over_delta)
        if any(abs(x - y) > TABLE_TOL for x, y in zip(got, (a_ref, b_ref, c_ref))):
            bad.append(("table", d, g, got))
        if abs(float(bounds.k_delta_g(d, g, res.a_star, res.b_star)) - res.a_star) >= 1e-9:
            bad.append(("K(a*, b*) != a*", d, g))
    rng = np.random.default_rng(0)
    for d in (2, 3, 5, 10):
        rho = bounds.rho_delta(d)
        top = rho * (1 - bounds.UPPER_GUARD) if rho < math.inf else 40.0
        for g in (3, 5, INFINITY):
            a = rng.uniform(0, 1, 200)
            b = np.sort(rng.uniform(1, top, (200, 2)), axis=1)
            lo = np.asarray(bounds.k_delta_g(d, g, a, b[:, 0]))
            hi = np.asarray(bounds.k_delta_g(d, g, a, b[:, 1]))
            if np.any((hi <= lo) & (b[:, 1] > b[:, 0]) & (a < 1)):
                bad.append(("K not increasing in b", d, g))
    for d in (2, 3, 7):
        a = np.linspace(0.0, 1.0, 41)
        ad = bounds.a_delta(d)
        closed = np.where(a < ad, np.power(1 + a, 1 / d) - 1, (1 - a) * bounds.big_r_delta(d))
        if np.max(np.abs(np.asarray(bounds.z_delta_g(d, INFINITY, a)) - closed)) > 1e-12:
            bad.append(("infinite-girth closed form", d))
    # the radius certified through the infinite-degree comparator never exceeds z(a)
    a = np.linspace(0.01, 0.99, 99)
    for g in (3, 5, 10):
        comparator = bounds._comparator_z(g, a)
        for d in (3, 10, 30):
            if np.any(comparator / d > np.asarray(bounds.z_delta_g(d, g, a)) + MONOTONE_SLACK):
                bad.append(("comparator radius above z", d, g))
    return (False, f"{len(bad)} problems, first: {bad[0]}") if bad else (True, "table anchors and identities hold")


SUITES: dict[str, Callable[[Level], tuple[bool, str]]] = {
    "penrose": check_penrose,
    "whitney-vs-deletion-contraction": check_whitney,
    "order-invariance": check_order_invariance,
    "forest-recursion": check_forest_recursion,
    "partition-function": check_partition_function,
    "bound-engine": check_bound_engine,
    "z-monotonicity": check_z_monotone,
    "c-over-delta-monotone": check_c_over_delta,
    "series-identities": check_series,
    "tree-bounds": check_tree_bounds,
    "ratio-bound": check_ratio_bound,
    "zero-free": check_zero_free,
}


def run(level_name: str = "quick", only: list[str] | None = None, echo: Callable[[str], None] | None = None) -> list[CheckResult]:
    level = make_level(level_name)
    results = []
    for name, suite in SUITES.items():
        if only and name not in only:
            continue
        start = time.perf_counter()
        try:
            ok, detail = suite(level)
        except Exception as exc:  # a crash is a named failure, not a traceback
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        res = CheckResult(name, ok, detail, time.perf_counter() - start)
        if echo:
            echo(res.line())
        results.append(res)
    return results
