from itertools import product

import pytest
from hypothesis import given, settings

from signedcsf.graph import SignedGraph, covering_graph
from signedcsf.orientations import (
    acyclic_census,
    acyclic_orientations,
    enumerate_orientations,
    is_acyclic,
    is_proper,
    orient_covering,
    orientation_from_coloring,
    parse_orientation,
    preserves,
    sinks,
    total_acyclic,
)
from signedcsf.csf import star
from signedcsf.goldens import load_graph

from conftest import signed_graphs


@pytest.mark.parametrize(
    "name, count",
    [("triangle", 8), ("negloop", 2), ("negedge", 2), ("vertex", 1), ("unsigned_triangle", 8)],
)
def test_orientation_counts(name, count):
    assert sum(1 for _ in enumerate_orientations(load_graph(name))) == count


def test_empty_graph_single_orientation():
    g = SignedGraph.build(["a", "b"], [])
    os_ = list(enumerate_orientations(g))
    assert len(os_) == 1
    assert sinks(os_[0]) == {"a", "b"}


def test_positive_loop_never_acyclic():
    g = SignedGraph.build(["a"], [("a", "a", "+")])
    assert acyclic_census(g) == {}


def test_census_goldens(triangle, unsigned_triangle):
    assert acyclic_census(triangle) == {2: 1, 1: 4, 0: 3}
    assert acyclic_census(unsigned_triangle) == {1: 6}
    assert acyclic_census(star(2)) == {2: 1, 1: 3}
    assert acyclic_census(load_graph("negloop")) == {1: 1, 0: 1}


def test_cyclic_unsigned_triangle():
    g = load_graph("unsigned_triangle")
    cyclic = [o for o in enumerate_orientations(g) if not is_acyclic(o)]
    assert len(cyclic) == 2


def test_negative_loop_arcs():
    g = load_graph("negloop")
    arcs = orient_covering(parse_orientation(g, "in"))
    assert [(str(x), str(y)) for x, y, _ in arcs] == [("-v", "+v"), ("-v", "+v")]


@given(signed_graphs(max_vertices=3, max_edges=4))
@settings(max_examples=80)
def test_census_partitions_acyclic_orientations(g):
    census = acyclic_census(g)
    assert sum(census.values()) == len(acyclic_orientations(g))
    assert all(0 <= k <= g.n for k in census)


@given(signed_graphs(max_vertices=3, max_edges=4))
@settings(max_examples=80)
def test_sink_matches_covering_criterion(g):
    # v is a sink iff +v has no outgoing covering arc
    for o in enumerate_orientations(g):
        tails = {x for x, _, _ in orient_covering(o)}
        crit = {v for v in g.vertices if (v, 1) not in {(t.base, t.sign) for t in tails}}
        assert sinks(o) == crit


@given(signed_graphs(max_vertices=3, max_edges=4))
@settings(max_examples=60)
def test_reversal_maps_sinks_to_sources(g):
    for o in acyclic_orientations(g):
        r = o.reversed()
        assert is_acyclic(r)
        # sources of o: +v with no incoming arc
        heads = {(y.base, y.sign) for _, y, _ in orient_covering(o)}
        sources = {v for v in g.vertices if (v, 1) not in heads}
        assert sinks(r) == sources


@given(signed_graphs(max_vertices=3, max_edges=4))
@settings(max_examples=40)
def test_census_relabel_invariant(g):
    mapping = {v: f"x{len(g.vertices) - i}" for i, v in enumerate(g.vertices)}
    assert acyclic_census(g.relabel(mapping)) == acyclic_census(g)


@given(signed_graphs(max_vertices=3, max_edges=4))
@settings(max_examples=40)
def test_proper_colorings_induce_acyclic_orientations(g):
    lam = g.n
    vs = list(g.vertices)
    for cols in product(range(-lam, lam + 1), repeat=len(vs)):
        k = dict(zip(vs, cols))
        if not is_proper(g, k):
            continue
        o = orientation_from_coloring(g, k)
        assert is_acyclic(o)
        assert preserves(k, o)


def test_covering_vertex_count(triangle):
    assert len(covering_graph(triangle).vertices) == 6
    assert total_acyclic(triangle) == 8
