import pytest
from hypothesis import given, settings

from signedcsf.csf import (
    csf,
    csf_oracle,
    double_star,
    double_star_csf,
    star,
    star_csf,
)
from signedcsf.graph import SignedGraph, switch
from signedcsf.goldens import load_graph
from signedcsf.psym import p, truncate_eval, x0

from conftest import random_graphs, signed_graphs

TRIANGLE = p(1) ** 3 - p(1) * p(1, 1) - p(1) * p(2) * 2 + p(2, 1) * 2 + p(3) - x0() ** 3


def test_triangle_golden(triangle):
    assert csf(triangle) == TRIANGLE
    assert csf(load_graph("triangle_dc")) == TRIANGLE


@pytest.mark.parametrize(
    "name, expected",
    [
        ("negloop", p(1) - x0()),
        ("negedge", p(1) ** 2 - p(1, 1)),
        ("vertex", p(1)),
        ("negloop_heavy", p(3) - x0() ** 3),
    ],
)
def test_small_goldens(name, expected):
    assert csf(load_graph(name)) == expected


def test_positive_loop_vanishes():
    g = SignedGraph.build(["a", "b"], [("a", "b", "-"), ("b", "b", "+")])
    assert not csf(g)


def test_memo_and_threads_agree(triangle):
    g = double_star(2, 2)
    base = csf(g)
    assert csf(g, memo=True) == base
    assert csf(g, threads=2) == base


@pytest.mark.parametrize("k", range(7))
def test_star_closed_form(k):
    assert csf(star(k)) == star_csf(k)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(4) for m in range(4)])
def test_double_star_closed_form(n, m):
    assert csf(double_star(n, m)) == double_star_csf(n, m)


@given(signed_graphs(max_vertices=3, max_edges=4, max_weight=2))
@settings(max_examples=60, deadline=None)
def test_oracle_agreement(g):
    lam = g.n
    assert truncate_eval(csf(g), lam) == csf_oracle(g, lam)


@given(signed_graphs(max_vertices=4, max_edges=5))
@settings(max_examples=60, deadline=None)
def test_edge_order_independent(g):
    h = SignedGraph(g.vertices, g.weights, tuple(reversed(g.edges)))
    assert csf(h) == csf(g)


@given(signed_graphs(max_vertices=4, max_edges=5, max_weight=2))
@settings(max_examples=60, deadline=None)
def test_switching_invariance(g):
    f = csf(g)
    for v in g.vertices:
        assert csf(switch(g, v)) == f


@given(signed_graphs(max_vertices=3, max_edges=3), signed_graphs(max_vertices=2, max_edges=3))
@settings(max_examples=40, deadline=None)
def test_disjoint_union_multiplicative(g, h):
    h = h.relabel({v: v.upper() for v in h.vertices})
    assert csf(g.disjoint_union(h)) == csf(g) * csf(h)


@given(signed_graphs(max_vertices=4, max_edges=5))
@settings(max_examples=60, deadline=None)
def test_all_positive_graphs_use_only_p_a0(g):
    pos = SignedGraph(g.vertices, g.weights, tuple(e for e in g.edges if e.sign > 0))
    for kind, a, b in csf(pos).generators():
        assert kind == "p" and b == 0


@given(signed_graphs(max_vertices=4, max_edges=5, max_weight=2))
@settings(max_examples=40, deadline=None)
def test_homogeneous_of_weight_mass(g):
    f = csf(g)
    if f:
        assert f.is_homogeneous()


def test_random_graphs_match_oracle():
    for g in random_graphs(15, seed=7, max_vertices=4, max_edges=5, max_weight=2):
        assert truncate_eval(csf(g), g.n) == csf_oracle(g, g.n)
