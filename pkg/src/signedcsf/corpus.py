"""Small signed graphs for exhaustive checks."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement
from typing import Iterator

from .graph import SignedGraph


def edge_slots(vertices: list[str]) -> list[tuple[str, str, str]]:
    slots = []
    for i, u in enumerate(vertices):
        for v in vertices[i:]:
            slots += [(u, v, "+"), (u, v, "-")]
    return slots


def all_signed_graphs(max_vertices: int, max_edges: int, min_vertices: int = 1) -> Iterator[SignedGraph]:
    """Every edge multiset (loops and parallels included) on vertices 'a', 'b', ...

    Labeled graphs, not isomorphism classes.
    """
    for n in range(min_vertices, max_vertices + 1):
        vs = [chr(ord("a") + i) for i in range(n)]
        slots = edge_slots(vs)
        for m in range(max_edges + 1):
            for es in combinations_with_replacement(slots, m):
                yield SignedGraph.build(vs, es)


def random_signed_graph(
    rng: random.Random,
    max_vertices: int = 5,
    max_edges: int = 6,
    loop_prob: float = 0.1,
    max_weight: int = 1,
) -> SignedGraph:
    n = rng.randint(1, max_vertices)
    vs = [chr(ord("a") + i) for i in range(n)]
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        u = rng.choice(vs)
        v = u if (n == 1 or rng.random() < loop_prob) else rng.choice([x for x in vs if x != u])
        edges.append((u, v, rng.choice("+-")))
    weights = None
    if max_weight > 1:
        weights = {}
        for v in vs:
            w = (rng.randint(0, max_weight), rng.randint(0, max_weight))
            weights[v] = w if w != (0, 0) else (1, 0)
    return SignedGraph.build(vs, edges, weights)
