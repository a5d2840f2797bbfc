"""Signed multigraphs with double vertex weights.

Edges are an indexed list (parallel edges and loops are allowed, and
contraction creates them).  Every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

POS = 1
NEG = -1

DEFAULT_WEIGHT = (1, 0)


class Edge(NamedTuple):
    u: str
    v: str
    sign: int  # +1 or -1

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: str) -> str:
        return self.v if x == self.u else self.u


class CoveringVertex(NamedTuple):
    base: str
    sign: int

    def __neg__(self) -> "CoveringVertex":
        return CoveringVertex(self.base, -self.sign)

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.base


@dataclass(frozen=True)
class CoveringGraph:
    vertices: tuple[CoveringVertex, ...]
    # (x, y, index of the base edge)
    edges: tuple[tuple[CoveringVertex, CoveringVertex, int], ...]

    def negated(self) -> "CoveringGraph":
        return CoveringGraph(
            tuple(-x for x in self.vertices),
            tuple((-x, -y, i) for x, y, i in self.edges),
        )

    def edge_multiset(self) -> list:
        return sorted((tuple(sorted((x, y))), i) for x, y, i in self.edges)


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


@dataclass(frozen=True)
class SignedGraph:
    vertices: tuple[str, ...]
    weights: tuple[tuple[int, int], ...]
    edges: tuple[Edge, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.weights) != len(self.vertices):
            raise GraphError("one weight pair per vertex required")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex id")
        for v, (wp, wm) in zip(self.vertices, self.weights):
            if wp < 0 or wm < 0:
                raise GraphError(f"negative weight at {v!r}")
            if wp == 0 and wm == 0:
                raise GraphError(f"weight (0,0) at {v!r} has no p-basis image")
        index = {v: i for i, v in enumerate(self.vertices)}
        for e in self.edges:
            if e.u not in index or e.v not in index:
                raise GraphError(f"edge {e} uses an undeclared vertex")
            if e.sign not in (POS, NEG):
                raise GraphError(f"edge sign must be +1 or -1, got {e.sign}")
        object.__setattr__(self, "_index", index)

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, int | str]] = (),
        weights: dict[str, tuple[int, int]] | None = None,
    ) -> "SignedGraph":
        """Convenience constructor; signs may be given as '+'/'-' or +1/-1."""
        vs = tuple(str(v) for v in vertices)
        weights = weights or {}
        ws = tuple(tuple(weights.get(v, DEFAULT_WEIGHT)) for v in vs)
        es = tuple(Edge(str(u), str(v), _parse_sign(s)) for u, v, s in edges)
        return cls(vs, ws, es)

    # -- queries ---------------------------------------------------------
    def weight(self, v: str) -> tuple[int, int]:
        return self.weights[self._index[v]]

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    @property
    def n(self) -> int:
        return len(self.vertices)

    def weight_mass(self) -> int:
        return sum(a + b for a, b in self.weights)

    def incident(self, v: str) -> list[int]:
        return [i for i, e in enumerate(self.edges) if v in (e.u, e.v)]

    def has_positive_loop(self) -> bool:
        return any(e.is_loop and e.sign == POS for e in self.edges)

    # -- operations ------------------------------------------------------
    def switch(self, v: str) -> "SignedGraph":
        return switch(self, v)

    def delete_edge(self, i: int) -> "SignedGraph":
        return delete_edge(self, i)

    def contract_edge(self, i: int) -> "SignedGraph":
        return contract_edge(self, i)

    def with_edges(self, edges: Iterable[Edge]) -> "SignedGraph":
        return SignedGraph(self.vertices, self.weights, tuple(edges))

    def relabel(self, mapping: dict[str, str]) -> "SignedGraph":
        return SignedGraph(
            tuple(mapping[v] for v in self.vertices),
            self.weights,
            tuple(Edge(mapping[e.u], mapping[e.v], e.sign) for e in self.edges),
        )

    def disjoint_union(self, other: "SignedGraph") -> "SignedGraph":
        clash = set(self.vertices) & set(other.vertices)
        if clash:
            raise GraphError(f"vertex ids overlap: {sorted(clash)}")
        return SignedGraph(
            self.vertices + other.vertices,
            self.weights + other.weights,
            self.edges + other.edges,
        )

    def key(self) -> tuple:
        """Hashable serialization, insensitive to edge order and endpoint order."""
        es = sorted((min(e.u, e.v), max(e.u, e.v), e.sign) for e in self.edges)
        return (tuple(zip(self.vertices, self.weights)), tuple(es))

    def to_text(self) -> str:
        lines = []
        for v, (a, b) in zip(self.vertices, self.weights):
            lines.append(f"V {v}" if (a, b) == DEFAULT_WEIGHT else f"V {v} {a} {b}")
        for e in self.edges:
            lines.append(f"E {e.u} {e.v} {_sign_char(e.sign)}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        es = ", ".join(f"{e.u}{e.v}{_sign_char(e.sign)}" for e in self.edges)
        return f"SignedGraph(V={list(self.vertices)}, E=[{es}])"


def _parse_sign(s) -> int:
    if s in ("+", 1, "+1"):
        return POS
    if s in ("-", -1, "-1"):
        return NEG
    raise GraphError(f"bad sign {s!r}")


def _check_edge_index(g: SignedGraph, i: int) -> None:
    if not 0 <= i < len(g.edges):
        raise GraphError(f"edge index {i} out of range (graph has {len(g.edges)} edges)")


def switch(g: SignedGraph, v: str) -> SignedGraph:
    """Flip every non-loop edge at ``v`` and swap the weight pair at ``v``."""
    if not g.has_vertex(v):
        raise GraphError(f"unknown vertex {v!r}")
    edges = tuple(
        Edge(e.u, e.v, -e.sign) if (v in (e.u, e.v) and not e.is_loop) else e
        for e in g.edges
    )
    weights = tuple(
        (w[1], w[0]) if x == v else w for x, w in zip(g.vertices, g.weights)
    )
    return SignedGraph(g.vertices, weights, edges)


def delete_edge(g: SignedGraph, i: int) -> SignedGraph:
    _check_edge_index(g, i)
    return g.with_edges(g.edges[:i] + g.edges[i + 1:])


def contract_edge(g: SignedGraph, i: int) -> SignedGraph:
    """Merge the endpoints of positive non-loop edge ``i``.

    The merged vertex keeps the smaller id and the summed weight; parallel
    copies of the edge turn into loops of their own sign.
    """
    _check_edge_index(g, i)
    e = g.edges[i]
    if e.is_loop:
        raise GraphError("cannot contract a loop")
    if e.sign != POS:
        raise GraphError("only positive edges can be contracted")
    keep, gone = sorted((e.u, e.v))
    wk, wg = g.weight(keep), g.weight(gone)
    vertices, weights = [], []
    for v, w in zip(g.vertices, g.weights):
        if v == gone:
            continue
        vertices.append(v)
        weights.append((wk[0] + wg[0], wk[1] + wg[1]) if v == keep else w)

    def r(x: str) -> str:
        return keep if x == gone else x

    edges = tuple(Edge(r(f.u), r(f.v), f.sign) for j, f in enumerate(g.edges) if j != i)
    return SignedGraph(tuple(vertices), tuple(weights), edges)


def covering_graph(g: SignedGraph) -> CoveringGraph:
    vs = []
    for v in g.vertices:
        vs.extend((CoveringVertex(v, POS), CoveringVertex(v, NEG)))
    es = []
    for i, e in enumerate(g.edges):
        # {+v, sgn(e) u} and {-v, -sgn(e) u}
        es.append((CoveringVertex(e.v, POS), CoveringVertex(e.u, e.sign), i))
        es.append((CoveringVertex(e.v, NEG), CoveringVertex(e.u, -e.sign), i))
    return CoveringGraph(tuple(vs), tuple(es))


# -- text format ----------------------------------------------------------

def parse_graph(text: str) -> SignedGraph:
    """Parse the line format ``V <id> [<w+> <w->]`` / ``E <u> <v> <+|->``."""
    vertices: list[str] = []
    weights: dict[str, tuple[int, int]] = {}
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "V":
            if len(tok) not in (2, 4):
                raise GraphParseError(lineno, "expected 'V <id> [<w+> <w->]'")
            v = tok[1]
            if v in weights:
                raise GraphParseError(lineno, f"vertex {v!r} declared twice")
            if len(tok) == 4:
                try:
                    w = (int(tok[2]), int(tok[3]))
                except ValueError:
                    raise GraphParseError(lineno, "weights must be integers") from None
                if w[0] < 0 or w[1] < 0 or w == (0, 0):
                    raise GraphParseError(lineno, f"invalid weight {w}")
            else:
                w = DEFAULT_WEIGHT
            vertices.append(v)
            weights[v] = w
        elif kind == "E":
            if len(tok) != 4 or tok[3] not in ("+", "-"):
                raise GraphParseError(lineno, "expected 'E <u> <v> <+|->'")
            u, v = tok[1], tok[2]
            for x in (u, v):
                if x not in weights:
                    raise GraphParseError(lineno, f"undeclared vertex {x!r}")
            edges.append(Edge(u, v, _parse_sign(tok[3])))
        else:
            raise GraphParseError(lineno, f"unknown directive {kind!r}")
    return SignedGraph(tuple(vertices), tuple(weights[v] for v in vertices), tuple(edges))


def read_graph(path) -> SignedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
