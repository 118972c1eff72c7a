import math
from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from chromabound.bcf import chromatic_dc, chromatic_whitney, forest_gf, xi_polymer
from chromabound.bounds import INF, k_delta_g, rho_delta, x_delta, z_delta_g
from chromabound.graph import INFINITY, Graph, bfs_distances, delete_edge, distance, girth
from chromabound.polynomial import IntPolynomial
from chromabound.roots import find_roots, residual
from chromabound.treegf import solve_u


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 12))) if pairs else []
    return Graph(n, tuple(chosen))


@given(graphs(), st.randoms())
@settings(max_examples=60, deadline=None)
def test_whitney_equals_dc_under_any_order(G, rnd):
    order = list(range(G.m))
    rnd.shuffle(order)
    H = G.with_edge_order(order)
    assert chromatic_whitney(H) == chromatic_dc(G)
    assert forest_gf(H) == forest_gf(G)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_chromatic_invariants(G):
    P = chromatic_dc(G)
    assert P.degree == G.n and P.leading == 1
    if G.m:
        assert P[G.n - 1] == -G.m


@given(graphs(max_n=6), st.fractions(min_value=-5, max_value=5).filter(lambda q: q != 0))
@settings(max_examples=40, deadline=None)
def test_partition_function_identity(G, q):
    assert q ** G.n * xi_polymer(G, q) == chromatic_dc(G)(q)


@given(graphs())
@settings(max_examples=80, deadline=None)
def test_girth_forest_characterisation(G):
    assert (girth(G) == INFINITY) == (G.m == G.n - len(G.components()))


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_deleting_a_shortest_cycle_edge_does_not_shrink_girth(G):
    g = girth(G)
    for i in range(G.m):
        assert girth(delete_edge(G, i)) >= g


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_distance_metric(G):
    d = [bfs_distances(G, v) for v in range(G.n)]
    for u in range(G.n):
        for v in range(G.n):
            assert distance(G, u, v) == distance(G, v, u)
            for w in range(G.n):
                if v in d[u] and w in d[v]:
                    assert d[u][w] <= d[u][v] + d[v][w]


@given(st.integers(2, 40), st.floats(0.0, 1.0), st.floats(0.0, 0.999))
@settings(max_examples=200, deadline=None)
def test_k_increasing_in_b(delta, a, frac):
    rho = rho_delta(delta)
    top = rho * (1 - 1e-9) if rho < math.inf else 30.0
    b1 = 1 + frac * (top - 1)
    b2 = b1 + 0.5 * (top - b1)
    for g in (3, 6, INF):
        if a < 1 and b2 > b1:
            assert k_delta_g(delta, g, a, b2) >= k_delta_g(delta, g, a, b1)


@given(st.integers(1, 30), st.sampled_from([3, 4, 7, 12, INF]), st.floats(0.0, 1.0))
@settings(max_examples=150, deadline=None)
def test_z_monotone_in_delta(delta, g, a):
    assert z_delta_g(delta, g, a) >= z_delta_g(delta + 1, g, a) - 1e-12


@given(st.integers(2, 30), st.floats(0.0, 0.999))
@settings(max_examples=150, deadline=None)
def test_solve_u_fixed_point(delta, frac):
    rho = rho_delta(delta)
    top = rho * (1 - 1e-9) if rho < math.inf else 1e6
    x = x_delta(delta, 1 + frac * (top - 1))
    pt = solve_u(delta, x)
    assert abs(pt.u - x * (1 + pt.u) ** (delta - 1)) <= 1e-13 * (1 + pt.u) ** delta
    assert pt.T == np.float64(pt.x * pt.S)


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=9).filter(lambda c: c[-1] != 0))
@settings(max_examples=100, deadline=None)
def test_root_count_and_residuals(coeffs):
    p = IntPolynomial(tuple(coeffs))
    roots = find_roots(p)
    assert len(roots) == p.degree
    assert all(residual(p, r) < 1e-8 for r in roots)
