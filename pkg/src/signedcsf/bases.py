"""Basis changes out of the p-basis and sink-census extraction.

* augmented elementary: p[n,0] via Newton's identities in e[1..n],
  p[a,b] = (-1)^(a+b+1) q[a,b] for b >= 1, x0 = -z;
* xi: p[n,0] = sum_i C(n,i) (-1)^(n-i) xi[i], same q/z rules;
* zeta: the unsigned projection (p[a,0] -> p[a], everything else -> 0)
  followed by p[a] = sum_i C(a,i) (-1)^(a-i) zeta[i].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .poly import Gen, Poly

KINDS = ("elementary", "xi", "zeta")


def e(n: int) -> Poly:
    return Poly.gen(("e", n, 0))


def q(a: int, b: int) -> Poly:
    if a < b:
        a, b = b, a
    return Poly.gen(("q", a, b))


def z() -> Poly:
    return Poly.gen(("z", 0, 0))


def xi(n: int) -> Poly:
    return Poly.gen(("xi", n, 0))


def zeta(n: int) -> Poly:
    return Poly.gen(("zeta", n, 0))


def pa(a: int) -> Poly:
    """Unsigned power sum p_a = sum_{i >= 1} x_i^a."""
    return Poly.gen(("pa", a, 0))


@dataclass(frozen=True)
class BasisExpansion:
    kind: str
    poly: Poly

    def __str__(self) -> str:
        return str(self.poly)


@lru_cache(maxsize=None)
def p_to_e(n: int) -> Poly:
    """p[n,0] = (-1)^(n+1) n e_n + sum_{i<n} (-1)^(n+i-1) e_{n-i} p[i,0]."""
    if n < 1:
        raise ValueError("n >= 1")
    out = e(n) * ((-1) ** (n + 1) * n)
    for i in range(1, n):
        out = out + e(n - i) * p_to_e(i) * (-1) ** (n + i - 1)
    return out


@lru_cache(maxsize=None)
def p_to_xi(n: int) -> Poly:
    if n < 1:
        raise ValueError("n >= 1")
    return Poly.sum(xi(i) * (comb(n, i) * (-1) ** (n - i)) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def pa_to_zeta(n: int) -> Poly:
    if n < 1:
        raise ValueError("n >= 1")
    return Poly.sum(zeta(i) * (comb(n, i) * (-1) ** (n - i)) for i in range(1, n + 1))


def _signed_rule(p_image):
    def image(g: Gen) -> Poly:
        kind, a, b = g
        if kind == "x0":
            return -z()
        if kind != "p":
            raise ValueError(f"expected a p-basis polynomial, got generator {g!r}")
        if b == 0:
            return p_image(a)
        return q(a, b) * (-1) ** (a + b + 1)

    return image


def expand_augmented(f: Poly) -> BasisExpansion:
    return BasisExpansion("elementary", f.substitute(_signed_rule(p_to_e)))


def expand_xi(f: Poly) -> BasisExpansion:
    return BasisExpansion("xi", f.substitute(_signed_rule(p_to_xi)))


def proj_pos(f: Poly) -> Poly:
    """Set every x_i with i <= 0 to zero: p[a,0] -> p[a]; p[a,b] (b >= 1), x0 -> 0."""

    def image(g: Gen) -> Poly:
        kind, a, b = g
        if kind == "p" and b == 0:
            return pa(a)
        if kind in ("p", "x0"):
            return Poly()
        raise ValueError(f"expected a p-basis polynomial, got generator {g!r}")

    return f.substitute(image)


def expand_zeta(f: Poly) -> BasisExpansion:
    """Zeta expansion; accepts either a p-basis polynomial or an unsigned power-sum one."""

    def image(g: Gen) -> Poly:
        if g[0] != "pa":
            raise ValueError(f"expected unsigned power sums, got generator {g!r}")
        return pa_to_zeta(g[1])

    if any(g[0] in ("p", "x0") for g in f.generators()):
        f = proj_pos(f)
    return BasisExpansion("zeta", f.substitute(image))


def expand(f: Poly, kind: str) -> BasisExpansion:
    if kind == "elementary":
        return expand_augmented(f)
    if kind == "xi":
        return expand_xi(f)
    if kind == "zeta":
        return expand_zeta(f)
    raise ValueError(f"unknown basis kind {kind!r}")


def sink_count(kind: str, monomial) -> int:
    if kind == "elementary":
        return sum(1 for g in monomial if g[0] == "e")
    if kind == "xi":
        return sum(g[1] for g in monomial if g[0] == "xi")
    if kind == "zeta":
        return sum(g[1] for g in monomial if g[0] == "zeta")
    raise ValueError(f"unknown basis kind {kind!r}")


def sink_census_from_expansion(x: BasisExpansion) -> dict[int, int]:
    """Coefficient sums grouped by sink count; keys are the counts that occur."""
    out: dict[int, int] = {}
    for m, c in x.poly.terms.items():
        k = sink_count(x.kind, m)
        out[k] = out.get(k, 0) + c
    return out


def nonzero(census: dict[int, int]) -> dict[int, int]:
    return {k: v for k, v in census.items() if v}


def abs_coeff_sum(f: Poly) -> int:
    return sum(abs(c) for c in f.terms.values())


def format_census(census: dict[int, int]) -> str:
    return "{" + ", ".join(f"{k}:{census[k]}" for k in sorted(census, reverse=True)) + "}"
