"""Chromatic B-symmetric function by weighted deletion-contraction.

Recursion, applied to a doubly weighted signed graph:

1. a positive loop admits no proper coloring -> 0;
2. a positive non-loop edge e: X(G) = X(G - e) - X(G / e);
3. only negative non-loop edges left: switch at an endpoint (X is
   invariant), which makes that edge positive;
4. isolated vertices: product of p[a,b], or p[a,b] - x0^(a+b) under a
   negative loop.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from math import comb

from .graph import NEG, POS, SignedGraph, contract_edge, delete_edge, switch
from .orientations import Coloring
from .poly import Poly
from .psym import TruncatedPoly, p, x0


def _base_case(g: SignedGraph) -> Poly:
    looped = {e.u for e in g.edges if e.is_loop and e.sign == NEG}
    out = Poly.const(1)
    for v, (a, b) in zip(g.vertices, g.weights):
        factor = p(a, b)
        if v in looped:
            factor = factor - x0() ** (a + b)
        out = out * factor
    return out


def _step(g: SignedGraph):
    """One reduction: ('zero',), ('base',), ('dc', i) or ('switch', v)."""
    if g.has_positive_loop():
        return ("zero",)
    neg = None
    for i, e in enumerate(g.edges):
        if e.is_loop:
            continue
        if e.sign == POS:
            return ("dc", i)
        if neg is None:
            neg = e
    if neg is not None:
        return ("switch", min(neg.u, neg.v))
    return ("base",)


class _Engine:
    def __init__(self, memo: bool = False):
        self.memo: dict | None = {} if memo else None

    def __call__(self, g: SignedGraph) -> Poly:
        if self.memo is not None:
            key = g.key()
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        step = _step(g)
        if step[0] == "zero":
            res = Poly()
        elif step[0] == "base":
            res = _base_case(g)
        elif step[0] == "switch":
            res = self(switch(g, step[1]))
        else:
            i = step[1]
            res = self(delete_edge(g, i)) - self(contract_edge(g, i))
        if self.memo is not None:
            self.memo[key] = res
        return res


def csf(g: SignedGraph, memo: bool = False, threads: int = 1) -> Poly:
    """X_(G,w) in the p-basis."""
    if threads > 1:
        return _csf_parallel(g, memo, threads)
    return _Engine(memo)(g)


def _csf_worker(args) -> Poly:
    g, memo = args
    return _Engine(memo)(g)


def _csf_parallel(g: SignedGraph, memo: bool, threads: int) -> Poly:
    # expand the recursion into a signed frontier, then farm out the leaves
    frontier = [(1, g)]
    while len(frontier) < 4 * threads:
        grown, changed = [], False
        for s, h in frontier:
            step = _step(h)
            if step[0] == "dc":
                grown += [(s, delete_edge(h, step[1])), (-s, contract_edge(h, step[1]))]
                changed = True
            elif step[0] == "switch":
                grown.append((s, switch(h, step[1])))
                changed = True
            else:
                grown.append((s, h))
        frontier = grown
        if not changed:
            break
    with ProcessPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(_csf_worker, [(h, memo) for _, h in frontier]))
    return Poly.sum(part * s for (s, _), part in zip(frontier, parts))


def csf_oracle(g: SignedGraph, lam: int) -> TruncatedPoly:
    """Sum of the weighted monomials of all proper colorings in [-lam, lam]."""
    width = 2 * lam + 1
    verts = list(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    # edges checked as soon as both endpoints are colored
    checks: list[list] = [[] for _ in verts]
    for e in g.edges:
        i, j = pos[e.u], pos[e.v]
        checks[max(i, j)].append((i, j, e.sign))
    weights = list(g.weights)
    colors = [0] * len(verts)
    exp = [0] * width
    out: dict = defaultdict(int)

    def rec(depth: int) -> None:
        if depth == len(verts):
            out[tuple(exp)] += 1
            return
        wp, wm = weights[depth]
        for c in range(-lam, lam + 1):
            colors[depth] = c
            if any(colors[i] == s * colors[j] for i, j, s in checks[depth]):
                continue
            exp[c + lam] += wp
            exp[-c + lam] += wm
            rec(depth + 1)
            exp[c + lam] -= wp
            exp[-c + lam] -= wm

    rec(0)
    return TruncatedPoly(lam, out)


def coloring_monomial(g: SignedGraph, k: Coloring, lam: int) -> TruncatedPoly:
    powers: dict[int, int] = defaultdict(int)
    for v, (wp, wm) in zip(g.vertices, g.weights):
        powers[k[v]] += wp
        powers[-k[v]] += wm
    return TruncatedPoly.variable_power(lam, powers)


# -- star families -----------------------------------------------------------

def star(k: int) -> SignedGraph:
    """All-positive star: center ``c`` with leaves ``l1..lk``."""
    leaves = [f"l{i}" for i in range(1, k + 1)]
    return SignedGraph.build(["c"] + leaves, [("c", l, "+") for l in leaves])


def star_csf(k: int) -> Poly:
    return Poly.sum(
        p(1) ** (k - i) * p(i + 1) * ((-1) ** i * comb(k, i)) for i in range(k + 1)
    )


def double_star(n: int, m: int) -> SignedGraph:
    """Centers ``a0`` (n leaves ``a1..``) and ``b0`` (m leaves ``b1..``) joined by a negative edge."""
    a = [f"a{i}" for i in range(1, n + 1)]
    b = [f"b{i}" for i in range(1, m + 1)]
    edges = [("a0", x, "+") for x in a] + [("b0", y, "+") for y in b] + [("a0", "b0", "-")]
    return SignedGraph.build(["a0", "b0"] + a + b, edges)


def double_star_csf(n: int, m: int) -> Poly:
    terms = []
    for i in range(n + 1):
        for j in range(m + 1):
            c = comb(n, i) * comb(m, j) * (-1) ** (i + j)
            terms.append(
                p(1) ** (n + m - i - j) * (p(i + 1) * p(j + 1) - p(i + 1, j + 1)) * c
            )
    return Poly.sum(terms)
