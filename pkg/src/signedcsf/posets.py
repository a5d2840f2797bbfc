"""Signed posets, signed linear extensions and the coloring classes K(alpha, omega).

An acyclic orientation P orders the covering vertices +-v: x <_P y when
there is a directed path x -> y in the covering digraph.  A linear
extension is a signed permutation alpha (alpha(+v) in {+-1..+-d}, rank
bijective, alpha(-v) = -alpha(+v)) that is strictly increasing along
every arc.

Everything here is exhaustive and meant for graphs with a handful of
vertices; ``verify_sink_lemma`` checks, for every acyclic orientation P
and every omega in L(P), that

* the colorings of a box preserving P are split exactly once among the
  K(alpha, omega), alpha in L(P)  ("partition");
* sum_alpha phi_omega(alpha, omega) = t^sink(P)  ("sink");
* equal truncations of F_{alpha,omega} get equal phi_omega ("welldef").
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations, product

import numpy as np

from .functionals import T, UniPoly
from .graph import NEG, POS, CoveringVertex, SignedGraph
from .orientations import (
    Coloring,
    Orientation,
    acyclic_orientations,
    is_acyclic,
    orient_covering,
    sinks,
)
from .psym import TruncatedPoly

DEFAULT_D_MAX = 6


class SizeBoundError(ValueError):
    pass


class AmbiguousCaseError(AssertionError):
    pass


@dataclass(frozen=True)
class SignedLinearExtension:
    vertices: tuple[str, ...]
    values: tuple[int, ...]  # alpha(+v), aligned with vertices

    def __post_init__(self):
        d = len(self.vertices)
        if sorted(abs(x) for x in self.values) != list(range(1, d + 1)):
            raise ValueError("ranks must be a bijection onto 1..d")

    def __call__(self, x: CoveringVertex) -> int:
        return x.sign * self.values[self.vertices.index(x.base)]

    def rank(self, v: str) -> int:
        return abs(self.values[self.vertices.index(v)])

    def sign(self, v: str) -> int:
        return POS if self.values[self.vertices.index(v)] > 0 else NEG

    def order(self) -> list[str]:
        """Vertices by increasing rank."""
        return sorted(self.vertices, key=self.rank)

    def top_down(self) -> list[str]:
        """Covering vertices from the largest value to the smallest."""
        cv = [CoveringVertex(v, s) for v in self.vertices for s in (POS, NEG)]
        return [str(x) for x in sorted(cv, key=self, reverse=True)]

    def __str__(self) -> str:
        return " > ".join(self.top_down())

    @classmethod
    def from_top_down(cls, labels: list[str]) -> "SignedLinearExtension":
        """Build from a list such as ``['+b', '+a', '-c', '+c', '-a', '-b']``."""
        d = len(labels) // 2
        vals: dict[str, int] = {}
        for pos, lab in enumerate(labels[:d]):
            sign = 1 if lab[0] == "+" else -1
            vals[lab[1:]] = sign * (d - pos)
        vs = tuple(sorted(vals))
        return cls(vs, tuple(vals[v] for v in vs))


@dataclass(frozen=True)
class SignedPoset:
    orientation: Orientation
    arcs: frozenset = field(init=False)
    less: frozenset = field(init=False)

    def __post_init__(self):
        if not is_acyclic(self.orientation):
            raise ValueError("a signed poset needs an acyclic orientation")
        arcs = frozenset((x, y) for x, y, _ in orient_covering(self.orientation))
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "less", frozenset(_transitive_closure(arcs)))

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.orientation.graph.vertices

    def sink_count(self) -> int:
        return len(sinks(self.orientation))

    def lt(self, x: CoveringVertex, y: CoveringVertex) -> bool:
        return (x, y) in self.less


def _transitive_closure(arcs) -> set:
    succ: dict = {}
    for x, y in arcs:
        succ.setdefault(x, set()).add(y)
    out = set()
    for start in list(succ):
        stack, seen = list(succ[start]), set()
        while stack:
            y = stack.pop()
            if y in seen:
                continue
            seen.add(y)
            stack.extend(succ.get(y, ()))
        out.update((start, y) for y in seen)
    return out


def empty_poset(n: int) -> SignedPoset:
    vs = [f"v{i}" for i in range(1, n + 1)]
    return SignedPoset(Orientation(SignedGraph.build(vs), ()))


def linear_extensions(
    poset: SignedPoset, d_max: int = DEFAULT_D_MAX
) -> list[SignedLinearExtension]:
    vs = poset.vertices
    d = len(vs)
    if d > d_max:
        raise SizeBoundError(f"{d} vertices exceeds the enumeration bound {d_max}")
    pos = {v: i for i, v in enumerate(vs)}
    arcs = [(pos[x.base], x.sign, pos[y.base], y.sign) for x, y in poset.arcs]
    out = []
    for ranks in permutations(range(1, d + 1)):
        for signs in product((POS, NEG), repeat=d):
            vals = [r * s for r, s in zip(ranks, signs)]
            if all(sx * vals[ix] < sy * vals[iy] for ix, sx, iy, sy in arcs):
                out.append(SignedLinearExtension(vs, tuple(vals)))
    return out


def _covering(vs) -> list[CoveringVertex]:
    return [CoveringVertex(v, s) for v in vs for s in (POS, NEG)]


def in_K(k: Coloring, alpha: SignedLinearExtension, omega: SignedLinearExtension) -> bool:
    """Membership of coloring ``k`` in K(alpha, omega), straight from the three conditions."""
    vs = alpha.vertices
    for v in vs:
        if k[v] != 0 and (POS if k[v] > 0 else NEG) != alpha.sign(v):
            return False
    cover = _covering(vs)
    for x in cover:
        for y in cover:
            ax, ay = alpha(x), alpha(y)
            if abs(ax) < abs(ay) and not abs(k[x.base]) <= abs(k[y.base]):
                return False
            if ax < ay and omega(x) < omega(y):
                if not x.sign * k[x.base] < y.sign * k[y.base]:
                    return False
    return True


def box_colorings(n: int, lam: int) -> np.ndarray:
    """All colorings of n vertices with colors in [-lam, lam], one per row."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    axes = np.meshgrid(*[np.arange(-lam, lam + 1)] * n, indexing="ij")
    return np.stack([a.ravel() for a in axes], axis=1).astype(np.int64)


def K_mask(alpha: SignedLinearExtension, omega: SignedLinearExtension, K: np.ndarray) -> np.ndarray:
    """Vectorised K(alpha, omega) membership over the rows of ``K``."""
    vs = alpha.vertices
    n = len(vs)
    ok = np.ones(len(K), dtype=bool)
    A = np.abs(K)
    av = np.array(alpha.values)
    wv = np.array(omega.values)
    for i in range(n):
        ok &= K[:, i] * np.sign(av[i]) >= 0
        for j in range(n):
            if abs(av[i]) < abs(av[j]):
                ok &= A[:, i] <= A[:, j]
    for i, j in product(range(n), repeat=2):
        for ei, ej in product((1, -1), repeat=2):
            if ei * av[i] < ej * av[j] and ei * wv[i] < ej * wv[j]:
                ok &= ei * K[:, i] < ej * K[:, j]
    return ok


def preserve_mask(poset: SignedPoset, K: np.ndarray) -> np.ndarray:
    """Rows of ``K`` that are proper and induce the poset's orientation.

    A coloring induces P exactly when the cover colors (+v -> k(v),
    -v -> -k(v)) increase strictly along every arc.
    """
    pos = {v: i for i, v in enumerate(poset.vertices)}
    ok = np.ones(len(K), dtype=bool)
    for x, y in poset.arcs:
        ok &= x.sign * K[:, pos[x.base]] < y.sign * K[:, pos[y.base]]
    return ok


def F_trunc(alpha: SignedLinearExtension, omega: SignedLinearExtension, lam: int) -> TruncatedPoly:
    """sum of x^k over colorings k in K(alpha, omega) with colors in [-lam, lam]."""
    K = box_colorings(len(alpha.vertices), lam)
    return _F_from_rows(K[K_mask(alpha, omega, K)], lam)


def _F_from_rows(rows: np.ndarray, lam: int) -> TruncatedPoly:
    counts = Counter()
    for row in rows:
        exp = [0] * (2 * lam + 1)
        for c in row:
            exp[int(c) + lam] += 1
        counts[tuple(exp)] += 1
    return TruncatedPoly(lam, counts)


def phi_omega(alpha: SignedLinearExtension, omega: SignedLinearExtension) -> UniPoly:
    """Piecewise value of phi_omega on F_{alpha,omega}.

    With v_1..v_n in increasing alpha-rank, eps_i = sgn_alpha(v_i) and
    w_i = omega(eps_i v_i):

    * t (t-1)^k  if 0 < w_1 < .. < w_{n-k} > .. > w_n, eps_i = + for i >= n-k;
    * (t-1)^k    same chains, eps_{n-k} = -, eps_i = + for i > n-k;
    * (t-1)^n    if 0 > w_1 > .. > w_n and every eps_i = +;
    * 0 otherwise.
    """
    order = alpha.order()
    n = len(order)
    eps = [alpha.sign(v) for v in order]
    w = [omega(CoveringVertex(v, s)) for v, s in zip(order, eps)]

    matches = []
    for k in range(n):
        m = n - k - 1  # 0-based position of v_{n-k}
        if not all(w[i] > 0 for i in range(m + 1)):
            continue
        if not all(w[i] < w[i + 1] for i in range(m)):
            continue
        if not all(w[i] > w[i + 1] for i in range(m, n - 1)):
            continue
        if not all(eps[i] == POS for i in range(m + 1, n)):
            continue
        if eps[m] == POS:
            matches.append(("case1", T * (T - 1) ** k))
        else:
            matches.append(("case2", (T - 1) ** k))
    if all(s == POS for s in eps) and all(
        x > y for x, y in zip([0] + w, w)
    ):
        matches.append(("case3", (T - 1) ** n))

    values = {val for _, val in matches}
    if len(values) > 1:
        raise AmbiguousCaseError(f"alpha={alpha}, omega={omega} matches {matches}")
    return matches[0][1] if matches else UniPoly()


# -- verification -------------------------------------------------------------

@dataclass
class LemmaResult:
    name: str
    passed: bool = True
    checks: int = 0
    witness: str | None = None

    def fail(self, witness: str) -> None:
        if self.passed:
            self.passed = False
            self.witness = witness


@dataclass
class VerifyReport:
    graph: SignedGraph
    results: dict[str, LemmaResult]
    posets: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def lines(self) -> list[str]:
        out = []
        for name, r in self.results.items():
            status = "PASS" if r.passed else "FAIL"
            line = f"{name:<10} {status}  ({r.checks} checks over {self.posets} acyclic orientations)"
            if r.witness:
                line += f"\n    witness: {r.witness}"
            out.append(line)
        return out


LEMMAS = ("sink", "partition", "welldef")


def _poset_key(poset: SignedPoset) -> tuple:
    pos = {v: i for i, v in enumerate(poset.vertices)}
    arcs = sorted(((pos[x.base], x.sign), (pos[y.base], y.sign)) for x, y in poset.arcs)
    return (len(pos), tuple(arcs))


def check_poset(
    poset: SignedPoset,
    lemmas=("sink", "partition"),
    d_max: int = DEFAULT_D_MAX,
    results: dict[str, LemmaResult] | None = None,
) -> dict[str, LemmaResult]:
    results = results if results is not None else {name: LemmaResult(name) for name in lemmas}
    exts = linear_extensions(poset, d_max)
    n = len(poset.vertices)
    label = str(poset.orientation)

    if "sink" in lemmas:
        target = T ** poset.sink_count()
        r = results["sink"]
        for omega in exts:
            total = sum((phi_omega(a, omega) for a in exts), UniPoly())
            r.checks += 1
            if total != target:
                r.fail(f"P=[{label}] omega=({omega}): got {total}, want {target}")

    if "partition" in lemmas:
        r = results["partition"]
        K = box_colorings(n, max(n, 1))
        want = preserve_mask(poset, K).astype(np.int64)
        for omega in exts:
            cover = np.zeros(len(K), dtype=np.int64)
            for a in exts:
                cover += K_mask(a, omega, K)
            r.checks += 1
            bad = np.nonzero(cover != want)[0]
            if len(bad):
                kappa = dict(zip(poset.vertices, K[bad[0]].tolist()))
                r.fail(
                    f"P=[{label}] omega=({omega}): coloring {kappa} lies in "
                    f"{cover[bad[0]]} classes, preserves P: {bool(want[bad[0]])}"
                )

    if "welldef" in lemmas:
        r = results["welldef"]
        lam = n + 1
        K = box_colorings(n, lam)
        for omega in exts:
            seen: dict = {}
            for a in exts:
                F = _F_from_rows(K[K_mask(a, omega, K)], lam)
                key = frozenset(F.terms.items())
                val = phi_omega(a, omega)
                r.checks += 1
                if key in seen and seen[key][1] != val:
                    r.fail(
                        f"P=[{label}] omega=({omega}): F equal for alpha=({seen[key][0]}) "
                        f"and ({a}) but phi differs: {seen[key][1]} vs {val}"
                    )
                seen.setdefault(key, (a, val))
    return results


def verify_sink_lemma(
    g: SignedGraph,
    lemmas=("sink", "partition"),
    d_max: int = DEFAULT_D_MAX,
    cache: dict | None = None,
) -> VerifyReport:
    """Run the requested lemma checks over every acyclic orientation of ``g``.

    ``cache`` may be shared across calls; results depend only on the arc set.
    """
    if g.n > d_max:
        raise SizeBoundError(f"{g.n} vertices exceeds the enumeration bound {d_max}")
    lemmas = tuple(lemmas)
    for name in lemmas:
        if name not in LEMMAS:
            raise ValueError(f"unknown lemma {name!r}")
    results = {name: LemmaResult(name) for name in lemmas}
    count = 0
    for o in acyclic_orientations(g):
        poset = SignedPoset(o)
        count += 1
        key = (_poset_key(poset), lemmas)
        if cache is not None and key in cache:
            for name, (passed, checks, witness) in cache[key].items():
                results[name].checks += checks
                if not passed:
                    results[name].fail(witness)
            continue
        local = check_poset(poset, lemmas, d_max)
        if cache is not None:
            cache[key] = {nm: (lr.passed, lr.checks, lr.witness) for nm, lr in local.items()}
        for name, lr in local.items():
            results[name].checks += lr.checks
            if not lr.passed:
                results[name].fail(lr.witness)
    return VerifyReport(g, results, count)


# -- the worked example poset ------------------------------------------------

def example_poset() -> SignedPoset:
    """Three vertices a, b, c: a -> b positive, negative edges a-c and b-c
    both pointing in, and a negative loop at a pointing in."""
    g = SignedGraph.build(
        "abc", [("a", "b", "+"), ("a", "c", "-"), ("b", "c", "-"), ("a", "a", "-")]
    )
    return SignedPoset(Orientation(g, (">", "in", "in", "in")))
