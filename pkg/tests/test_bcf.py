import itertools
from fractions import Fraction

import pytest

from chromabound import caps
from chromabound.bcf import (
    NotAForestError,
    SingularRatioError,
    activity,
    bcf_spanning_tree_count,
    chromatic_dc,
    chromatic_whitney,
    connected_subsets,
    css_signed_sum,
    enumerate_bcf_forests,
    evaluate_ratio,
    forest_gf,
    is_bcf,
    penrose_check,
    ratio_R_u,
    xi_polymer,
)
from chromabound.corpus import complete, complete_bipartite, cube, cycle, edge_orders, path, petersen, star
from chromabound.graph import Graph
from chromabound.polynomial import Q, IntPolynomial
from conftest import count_colourings


def test_chromatic_examples(triangle):
    assert chromatic_dc(Graph(1)) == Q
    assert chromatic_dc(complete(2)) == Q ** 2 - Q
    assert chromatic_dc(triangle) == Q ** 3 - 3 * Q ** 2 + 2 * Q


@pytest.mark.parametrize("G", [complete(3), cycle(5), complete_bipartite(2, 3), star(3), Graph(3, ((0, 1),))])
def test_chromatic_matches_colouring_count(G):
    P = chromatic_dc(G)
    for q in range(G.n + 1):
        assert P(q) == count_colourings(G, q)


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_closed_form(n):
    assert chromatic_dc(cycle(n)) == (Q - 1) ** n + (-1) ** n * (Q - 1)


def test_chromatic_cap(monkeypatch):
    with pytest.raises(caps.SizeLimitError):
        chromatic_dc(complete(10))
    monkeypatch.setenv(caps.ENV_VAR, "50")
    assert chromatic_dc(complete(10)).degree == 10


def test_css_examples():
    G = complete(3)
    assert css_signed_sum(G, [0, 1]) == -1
    assert css_signed_sum(G, [0, 1, 2]) == 2
    assert css_signed_sum(path(3), [0, 1, 2]) == 1
    with pytest.raises(ValueError):
        css_signed_sum(path(3), [0, 2])
    with pytest.raises(ValueError):
        css_signed_sum(path(3), [0])


def test_activity_examples():
    G = complete(3)
    assert activity(G, [0, 1], 2) == Fraction(-1, 2)
    assert activity(G, [0, 1, 2], 2) == Fraction(1, 2)
    assert activity(G, [0, 1, 2], 1) == 2
    with pytest.raises(ZeroDivisionError):
        activity(G, [0, 1], 0)


def test_xi_examples():
    q = Fraction(5, 2)
    assert xi_polymer(Graph(1), q) == 1
    assert xi_polymer(complete(2), q) == 1 - 1 / q
    assert xi_polymer(complete(3), q) == 1 - 3 / q + 2 / q ** 2


def test_xi_complex_argument():
    q = 2 + 1j
    P = chromatic_dc(cycle(4))
    assert abs(q ** 4 * xi_polymer(cycle(4), q) - P(q)) < 1e-12


def test_is_bcf_triangle(triangle):
    assert is_bcf(triangle, [])
    assert not is_bcf(triangle, [0, 1])
    assert is_bcf(triangle, [0, 2])
    assert is_bcf(triangle, [1, 2])
    with pytest.raises(NotAForestError):
        is_bcf(triangle, [0, 1, 2])


def _contains_broken_circuit(G, tau):
    """Direct definition: some cycle minus its largest edge lies inside tau."""
    tau = set(tau)
    for k in range(3, G.n + 1):
        for cyc in itertools.combinations(range(G.m), k):
            H = Graph(G.n, tuple(G.edges[i] for i in cyc))
            degs = [H.degree(v) for v in range(G.n)]
            used = [v for v in range(G.n) if degs[v]]
            if any(d not in (0, 2) for d in degs) or not H.induced(used).is_connected():
                continue
            if set(cyc[:-1]) <= tau:
                return True
    return False


@pytest.mark.parametrize("G", [complete(4), cycle(5), complete_bipartite(2, 3)])
def test_is_bcf_matches_broken_circuit_definition(G):
    for k in range(G.n):
        for tau in itertools.combinations(range(G.m), k):
            try:
                got = is_bcf(G, tau)
            except NotAForestError:
                continue
            assert got == (not _contains_broken_circuit(G, tau))


def test_enumerate_examples(triangle):
    assert [r.edges for r in enumerate_bcf_forests(Graph(1))] == [()]
    assert [r.edges for r in enumerate_bcf_forests(complete(2))] == [(), (0,)]
    recs = enumerate_bcf_forests(triangle)
    assert len(recs) == 6
    assert sorted(r.size for r in recs) == [0, 1, 1, 1, 2, 2]
    assert enumerate_bcf_forests(triangle) == recs


def test_forest_gf_examples(triangle):
    assert forest_gf(complete(2)) == IntPolynomial((1, 1))
    assert forest_gf(triangle) == IntPolynomial((1, 3, 2))
    assert forest_gf(Graph(4)) == IntPolynomial((1,))


def test_whitney_examples(triangle):
    assert chromatic_whitney(complete(2)) == Q ** 2 - Q
    assert chromatic_whitney(triangle) == Q ** 3 - 3 * Q ** 2 + 2 * Q
    assert chromatic_whitney(cycle(4)) == Q ** 4 - 4 * Q ** 3 + 6 * Q ** 2 - 3 * Q


@pytest.mark.parametrize("G", [petersen(), cube(), complete_bipartite(3, 3), complete(5)])
def test_whitney_equals_deletion_contraction(G):
    P = chromatic_dc(G)
    for H in edge_orders(G):
        assert chromatic_whitney(H) == P


def test_ratio_examples(triangle):
    assert ratio_R_u(Graph(1), 0, 0.3) == 0
    z = 0.2 + 0.1j
    assert ratio_R_u(complete(2), 0, z) == pytest.approx(z)
    assert ratio_R_u(complete(2), 1, z) == pytest.approx(z)
    assert ratio_R_u(triangle, 1, 0) == 0


def test_ratio_singular():
    # F of the remaining edge is 1 + z, which vanishes at z = -1
    with pytest.raises(SingularRatioError):
        ratio_R_u(path(3), 0, -1)
    with pytest.raises(SingularRatioError):
        evaluate_ratio(IntPolynomial((1, 1)), IntPolynomial((1, 1)), -1)


def test_penrose_examples(triangle):
    assert penrose_check(triangle, [0, 1])
    assert penrose_check(triangle, [0, 1, 2])
    assert penrose_check(cycle(4), range(4))
    assert bcf_spanning_tree_count(cycle(4), range(4)) == 3


def test_connected_subsets_of_path():
    subsets = connected_subsets(path(4), 2)
    assert sorted(subsets) == [(0, 1), (0, 1, 2), (0, 1, 2, 3), (1, 2), (1, 2, 3), (2, 3)]
