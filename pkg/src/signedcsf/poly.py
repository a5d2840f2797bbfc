"""Sparse integer polynomials over named generators.

A generator is a tuple ``(kind, i, j)``; a monomial is the sorted tuple of
its generators, repeated by multiplicity.  The same machinery carries the
p-basis (``p``, ``x0``), the augmented elementary basis (``e``, ``q``,
``z``), the xi basis and the unsigned power sums / zeta basis.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import groupby
from typing import Callable, Iterable, Mapping

Gen = tuple  # (kind, i, j)
Monomial = tuple  # sorted tuple of Gen

# p/e/xi/zeta/pa come first, then q, then x0/z: x0 and z print last.
_RANK = {"p": 0, "pa": 0, "e": 0, "xi": 0, "zeta": 0, "q": 1, "x0": 2, "z": 2}


def gen_key(g: Gen) -> tuple:
    return (_RANK[g[0]], g[0], g[1], g[2])


def gen_degree(g: Gen) -> int:
    kind = g[0]
    if kind in ("x0", "z"):
        return 1
    return g[1] + g[2]


def gen_str(g: Gen) -> str:
    kind, i, j = g
    if kind in ("p", "q"):
        return f"{kind}[{i},{j}]"
    if kind in ("x0", "z"):
        return kind
    if kind == "pa":
        return f"p[{i}]"
    return f"{kind}[{i}]"


def make_monomial(gens: Iterable[Gen]) -> Monomial:
    return tuple(sorted(gens, key=gen_key))


def monomial_degree(m: Monomial) -> int:
    return sum(gen_degree(g) for g in m)


def monomial_str(m: Monomial) -> str:
    out = []
    for g, grp in groupby(m):
        k = len(list(grp))
        out.append(gen_str(g) + (f"^{k}" if k > 1 else ""))
    return "".join(out)


def term_order(m: Monomial) -> tuple:
    """Canonical order: higher degree first, then lexicographic on factors."""
    return (-monomial_degree(m), tuple(gen_key(g) for g in m))


class Poly:
    """Immutable sparse polynomial ``{monomial: int}`` with no zero entries."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}
        self._hash = None

    @classmethod
    def gen(cls, g: Gen) -> "Poly":
        return cls({(g,): 1})

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(): c})

    @classmethod
    def monomial(cls, m: Iterable[Gen], c: int = 1) -> "Poly":
        return cls({make_monomial(m): c})

    @classmethod
    def sum(cls, polys: Iterable["Poly"]) -> "Poly":
        out: dict = defaultdict(int)
        for f in polys:
            for m, c in f.terms.items():
                out[m] += c
        return cls(out)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[make_monomial(m1 + m2)] += c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure -------------------------------------------------------
    def substitute(self, image: Callable[[Gen], "Poly"]) -> "Poly":
        """Apply the ring homomorphism sending each generator ``g`` to ``image(g)``."""
        cache: dict = {}
        parts = []
        for m, c in self.terms.items():
            acc = Poly.const(c)
            for g, grp in groupby(m):
                if g not in cache:
                    cache[g] = image(g)
                acc = acc * cache[g] ** len(list(grp))
            parts.append(acc)
        return Poly.sum(parts)

    def evaluate(self, value: Callable[[Gen], object], one=1, zero=0):
        """Multiplicative/linear evaluation into any commutative ring."""
        cache: dict = {}
        total = zero
        for m, c in self.terms.items():
            acc = one
            for g in m:
                if g not in cache:
                    cache[g] = value(g)
                acc = acc * cache[g]
            total = total + acc * c
        return total

    def generators(self) -> set:
        return {g for m in self.terms for g in m}

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: term_order(mc[0]))

    def is_homogeneous(self) -> bool:
        return len({monomial_degree(m) for m in self.terms}) <= 1

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            body = monomial_str(m)
            mag = abs(c)
            coef = "" if (mag == 1 and body) else str(mag)
            s = coef + body
            if idx == 0:
                parts.append(("-" if c < 0 else "") + s)
            else:
                parts.append((" - " if c < 0 else " + ") + s)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"
