import random

import pytest
from hypothesis import strategies as st

from signedcsf.corpus import random_signed_graph
from signedcsf.graph import SignedGraph
from signedcsf.goldens import load_graph


@pytest.fixture
def triangle():
    return load_graph("triangle")


@pytest.fixture
def unsigned_triangle():
    return load_graph("unsigned_triangle")


@st.composite
def signed_graphs(draw, max_vertices=4, max_edges=5, max_weight=1):
    """Hypothesis strategy: small signed graphs with loops and parallel edges."""
    n = draw(st.integers(1, max_vertices))
    vs = [chr(ord("a") + i) for i in range(n)]
    edge = st.tuples(st.sampled_from(vs), st.sampled_from(vs), st.sampled_from("+-"))
    edges = draw(st.lists(edge, max_size=max_edges))
    weights = None
    if max_weight > 1:
        w = st.tuples(st.integers(0, max_weight), st.integers(0, max_weight)).filter(
            lambda x: x != (0, 0)
        )
        weights = {v: draw(w) for v in vs}
    return SignedGraph.build(vs, edges, weights)


def random_graphs(count, seed=0, **kw):
    rng = random.Random(seed)
    return [random_signed_graph(rng, **kw) for _ in range(count)]
