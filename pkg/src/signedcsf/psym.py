"""The p-basis: generators ``p[a,b]`` (a >= b, a >= 1) and ``x0``.

``p[a,b] = sum_i x_i^a x_{-i}^b`` over all integers i.  Truncating the index
range to ``[-lam, lam]`` turns any expression into an honest polynomial in
``2*lam + 1`` variables, which is what the brute-force oracles compare
against.
"""

from __future__ import annotations

import json
from collections import defaultdict
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from .poly import Gen, Monomial, Poly, make_monomial

BSymPoly = Poly

X0: Gen = ("x0", 0, 0)


def p_gen(a: int, b: int) -> Gen:
    if a < 0 or b < 0:
        raise ValueError(f"p[{a},{b}]: indices must be nonnegative")
    if a == 0 and b == 0:
        raise ValueError("p[0,0] is not a basis element")
    if a < b:
        a, b = b, a
    return ("p", a, b)


def p(a: int, b: int = 0) -> Poly:
    return Poly.gen(p_gen(a, b))


def x0() -> Poly:
    return Poly.gen(X0)


def pmono_normalize(factors: Iterable[tuple[int, int]], x0_exp: int = 0) -> Monomial:
    """Canonical monomial from a multiset of ``(a, b)`` pairs and an x0 exponent."""
    if x0_exp < 0:
        raise ValueError("negative x0 exponent")
    return make_monomial([p_gen(a, b) for a, b in factors] + [X0] * x0_exp)


def pmono_parts(m: Monomial) -> tuple[list[tuple[int, int]], int]:
    factors = [(g[1], g[2]) for g in m if g[0] == "p"]
    return factors, sum(1 for g in m if g[0] == "x0")


def to_json(f: Poly) -> str:
    rows = []
    for m, c in f.sorted_terms():
        factors, k = pmono_parts(m)
        rows.append({"factors": [list(ab) for ab in factors], "x0": k, "coeff": str(c)})
    return json.dumps(rows)


def from_json(text: str) -> Poly:
    terms: dict = defaultdict(int)
    for row in json.loads(text):
        terms[pmono_normalize(map(tuple, row["factors"]), row["x0"])] += int(row["coeff"])
    return Poly(terms)


# -- truncated evaluation ----------------------------------------------------

class TruncatedPoly:
    """Polynomial in ``x_{-lam}, ..., x_lam``; exponent vectors have width 2*lam+1."""

    __slots__ = ("lam", "terms")

    def __init__(self, lam: int, terms: Mapping[tuple, int] | None = None):
        if lam < 1:
            raise ValueError("lam must be >= 1")
        self.lam = lam
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    @property
    def width(self) -> int:
        return 2 * self.lam + 1

    def var_pos(self, i: int) -> int:
        return i + self.lam

    @classmethod
    def one(cls, lam: int) -> "TruncatedPoly":
        return cls(lam, {(0,) * (2 * lam + 1): 1})

    @classmethod
    def variable_power(cls, lam: int, powers: Mapping[int, int]) -> "TruncatedPoly":
        exp = [0] * (2 * lam + 1)
        for i, k in powers.items():
            exp[i + lam] += k
        return cls(lam, {tuple(exp): 1})

    def _check(self, other: "TruncatedPoly") -> None:
        if other.lam != self.lam:
            raise ValueError("truncation bounds differ")

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TruncatedPoly(self.lam, out)

    def __neg__(self) -> "TruncatedPoly":
        return TruncatedPoly(self.lam, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedPoly(self.lam, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        out: dict = defaultdict(int)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(k1, k2))] += c1 * c2
        return TruncatedPoly(self.lam, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self.lam == other.lam and self.terms == other.terms

    def substitute_indices(self, perm: Mapping[int, int]) -> "TruncatedPoly":
        """Rename variables ``x_i -> x_{perm[i]}``."""
        lam = self.lam
        out: dict = defaultdict(int)
        for k, c in self.terms.items():
            new = [0] * len(k)
            for pos, e in enumerate(k):
                if e:
                    new[perm[pos - lam] + lam] += e
            out[tuple(new)] += c
        return TruncatedPoly(lam, out)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def __repr__(self) -> str:
        return f"TruncatedPoly(lam={self.lam}, nterms={len(self.terms)})"


def _power_pair(lam: int, a: int, b: int, indices: Iterable[int]) -> TruncatedPoly:
    out: dict = defaultdict(int)
    for i in indices:
        exp = [0] * (2 * lam + 1)
        exp[i + lam] += a
        exp[-i + lam] += b
        out[tuple(exp)] += 1
    return TruncatedPoly(lam, out)


def truncate_generator(g: Gen, lam: int) -> TruncatedPoly:
    kind, i, j = g
    if kind == "p":
        return _power_pair(lam, i, j, range(-lam, lam + 1))
    if kind == "x0":
        return TruncatedPoly.variable_power(lam, {0: 1})
    if kind == "q":
        return truncate_generator(("p", i, j), lam) * (-1) ** (i + j + 1)
    if kind == "z":
        return -truncate_generator(X0, lam)
    if kind == "e":
        out = TruncatedPoly(lam)
        for idx in combinations(range(-lam, lam + 1), i):
            out = out + TruncatedPoly.variable_power(lam, {k: 1 for k in idx})
        return out
    if kind == "xi":
        out = TruncatedPoly(lam)
        for a in range(1, i + 1):
            out = out + truncate_generator(("p", a, 0), lam) * comb(i, a)
        return out
    if kind == "pa":
        return _power_pair(lam, i, 0, range(1, lam + 1))
    if kind == "zeta":
        out = TruncatedPoly(lam)
        for a in range(1, i + 1):
            out = out + truncate_generator(("pa", a, 0), lam) * comb(i, a)
        return out
    raise ValueError(f"unknown generator {g!r}")


def truncate_eval(f: Poly, lam: int) -> TruncatedPoly:
    """Replace each generator by its finite image over ``x_{-lam} .. x_lam``."""
    return f.evaluate(
        lambda g: truncate_generator(g, lam),
        one=TruncatedPoly.one(lam),
        zero=TruncatedPoly(lam),
    )
