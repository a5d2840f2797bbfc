"""Orientations of signed graphs and the coloring -> orientation map.

Each edge carries one token:

* positive non-loop ``u v``: ``>`` (u -> v) or ``<`` (v -> u);
* negative edge or negative loop: ``in`` (both arrows point at the
  endpoints) or ``out`` (both point away);
* positive loop: ``cyc`` (one arrow in and one out, always a cycle).

Acyclicity is decided on the directed covering graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Iterator, Mapping

from .graph import NEG, POS, CoveringVertex, GraphError, SignedGraph

FWD, BWD, IN, OUT, CYC = ">", "<", "in", "out", "cyc"

Coloring = Mapping[str, int]


def edge_choices(e) -> tuple[str, ...]:
    if e.sign == POS:
        return (CYC,) if e.is_loop else (FWD, BWD)
    return (IN, OUT)


@dataclass(frozen=True)
class Orientation:
    graph: SignedGraph
    config: tuple[str, ...]

    def __post_init__(self):
        if len(self.config) != len(self.graph.edges):
            raise GraphError("orientation needs one token per edge")
        for e, tok in zip(self.graph.edges, self.config):
            if tok not in edge_choices(e):
                raise GraphError(f"token {tok!r} not allowed on edge {e}")

    def __str__(self) -> str:
        return " ".join(self.config)

    def reversed(self) -> "Orientation":
        flip = {FWD: BWD, BWD: FWD, IN: OUT, OUT: IN, CYC: CYC}
        return Orientation(self.graph, tuple(flip[t] for t in self.config))

    def relabel(self, mapping: dict[str, str]) -> "Orientation":
        return Orientation(self.graph.relabel(mapping), self.config)


def parse_orientation(g: SignedGraph, text: str) -> Orientation:
    return Orientation(g, tuple(text.split()))


def orient_covering(o: Orientation) -> list[tuple[CoveringVertex, CoveringVertex, int]]:
    """Arcs ``(tail, head, edge index)`` of the induced covering orientation."""
    arcs = []
    for i, (e, tok) in enumerate(zip(o.graph.edges, o.config)):
        pu, mu = CoveringVertex(e.u, POS), CoveringVertex(e.u, NEG)
        pv, mv = CoveringVertex(e.v, POS), CoveringVertex(e.v, NEG)
        if tok == FWD:
            arcs += [(pu, pv, i), (mv, mu, i)]
        elif tok == BWD:
            arcs += [(pv, pu, i), (mu, mv, i)]
        elif tok == IN:
            arcs += [(mu, pv, i), (mv, pu, i)]
        elif tok == OUT:
            arcs += [(pv, mu, i), (pu, mv, i)]
        else:  # positive loop: a directed loop at +v and at -v
            arcs += [(pv, pv, i), (mv, mv, i)]
    return arcs


def is_acyclic(o: Orientation) -> bool:
    if o.graph.has_positive_loop():
        return False
    ts = TopologicalSorter()
    for v in o.graph.vertices:
        ts.add(CoveringVertex(v, POS))
        ts.add(CoveringVertex(v, NEG))
    for x, y, _ in orient_covering(o):
        ts.add(y, x)
    try:
        ts.prepare()
    except CycleError:
        return False
    return True


def _points_into(e, tok: str, x: str) -> bool:
    """Does the half-edge of ``e`` at endpoint ``x`` point toward ``x``?"""
    if tok == IN:
        return True
    if tok == OUT or tok == CYC:
        return False
    head = e.v if tok == FWD else e.u
    return x == head


def sinks(o: Orientation) -> set[str]:
    out = set()
    for v in o.graph.vertices:
        if all(
            _points_into(e, tok, v)
            for e, tok in zip(o.graph.edges, o.config)
            if v in (e.u, e.v)
        ):
            out.add(v)
    return out


def enumerate_orientations(g: SignedGraph) -> Iterator[Orientation]:
    """All orientations; binary counter over the free edges, lowest index = lowest bit."""
    choices = [edge_choices(e) for e in g.edges]
    free = [i for i, c in enumerate(choices) if len(c) == 2]
    for mask in range(1 << len(free)):
        config = [c[0] for c in choices]
        for bit, i in enumerate(free):
            if mask >> bit & 1:
                config[i] = choices[i][1]
        yield Orientation(g, tuple(config))


def acyclic_orientations(g: SignedGraph) -> list[Orientation]:
    return [o for o in enumerate_orientations(g) if is_acyclic(o)]


def acyclic_census(g: SignedGraph) -> dict[int, int]:
    """``{k: number of acyclic orientations with k sinks}``."""
    return dict(Counter(len(sinks(o)) for o in acyclic_orientations(g)))


def total_acyclic(g: SignedGraph) -> int:
    return sum(acyclic_census(g).values())


# -- colorings ---------------------------------------------------------------

def is_proper(g: SignedGraph, k: Coloring) -> bool:
    return all(k[e.u] != e.sign * k[e.v] for e in g.edges)


def orientation_from_coloring(g: SignedGraph, k: Coloring) -> Orientation:
    """Direct every covering edge from the smaller color to the larger one.

    The cover colors +v with k(v) and -v with -k(v).
    """
    if not is_proper(g, k):
        raise GraphError("coloring is not proper")
    config = []
    for e in g.edges:
        if e.sign == POS:
            config.append(FWD if k[e.u] < k[e.v] else BWD)
        else:
            # covering edge {+v, -u}: -u -> +v iff -k(u) < k(v)
            config.append(IN if k[e.u] + k[e.v] > 0 else OUT)
    return Orientation(g, tuple(config))


def preserves(k: Coloring, o: Orientation) -> bool:
    if not is_proper(o.graph, k):
        return False
    return orientation_from_coloring(o.graph, k) == o
