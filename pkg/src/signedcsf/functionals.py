"""Multiplicative functionals on p-basis polynomials.

``phi`` sends X_G to the sink generating polynomial sum_k acyc_G(k) t^k;
``chromatic_poly`` sends X_G to the signed chromatic polynomial in lambda.
Both are fixed by their values on the generators.
"""

from __future__ import annotations

from math import comb

from .graph import SignedGraph
from .poly import Gen, Poly


class UniPoly:
    """Integer polynomial in one variable, coefficients by ascending degree."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs=(), var: str = "t"):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def const(cls, c: int, var: str = "t") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def x(cls, var: str = "t") -> "UniPoly":
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, k: int, c: int = 1, var: str = "t") -> "UniPoly":
        return cls([0] * k + [c], var)

    @classmethod
    def from_census(cls, census: dict[int, int], var: str = "t") -> "UniPoly":
        if not census:
            return cls([], var)
        cs = [0] * (max(census) + 1)
        for k, n in census.items():
            cs[k] += n
        return cls(cs, var)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly.const(other, self.var)
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        out = UniPoly.const(1, self.var)
        for _ in range(k):
            out = out * self
        return out

    def exact_div(self, d: int) -> "UniPoly":
        if any(c % d for c in self.coeffs):
            raise ArithmeticError(f"{self} is not divisible by {d}")
        return UniPoly([c // d for c in self.coeffs], self.var)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_census(self) -> dict[int, int]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            mag = abs(c)
            body = (str(mag) if (mag != 1 or not mono) else "") + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


T = UniPoly.x("t")


def phi_generator(g: Gen) -> UniPoly:
    kind, a, b = g
    if kind == "x0":
        return UniPoly.const(-1)
    if kind != "p":
        raise ValueError(f"phi is defined on the p-basis, got {g!r}")
    if a < b:
        a, b = b, a
    if b == 0:
        return (T - 1) ** a - (-1) ** a
    return UniPoly.const(-((-1) ** (a + b)))


def phi(f: Poly) -> UniPoly:
    """Sink-census functional: p[a,0] -> (t-1)^a - (-1)^a, p[a,b] -> -(-1)^(a+b), x0 -> -1."""
    return f.evaluate(phi_generator, one=UniPoly.const(1), zero=UniPoly())


def phi_e(n: int) -> UniPoly:
    if n < 1:
        raise ValueError("n >= 1")
    return T


def phi_xi(n: int) -> UniPoly:
    if n < 1:
        raise ValueError("n >= 1")
    return T ** n


def chromatic_generator(g: Gen) -> UniPoly:
    if g[0] == "x0":
        return UniPoly.const(1, "lambda")
    if g[0] != "p":
        raise ValueError(f"chromatic functional is defined on the p-basis, got {g!r}")
    return UniPoly([1, 2], "lambda")


def chromatic_poly(f: Poly) -> UniPoly:
    """p[a,b] -> 2*lambda + 1, x0 -> 1; gives the number of proper colorings in [-lambda, lambda]."""
    return f.evaluate(
        chromatic_generator, one=UniPoly.const(1, "lambda"), zero=UniPoly([], "lambda")
    )


def zaslavsky_check(g: SignedGraph) -> tuple[int, int]:
    """``(chi(-1), (-1)^|V| * #acyclic orientations)``; the two must agree."""
    from .csf import csf
    from .orientations import total_acyclic

    lhs = chromatic_poly(csf(g))(-1)
    rhs = (-1) ** g.n * total_acyclic(g)
    return lhs, rhs


def solve_triangular(
    expansion: Poly, target: UniPoly, known: dict[Gen, UniPoly], unknown: Gen
) -> UniPoly:
    """Solve ``phi(expansion) == target`` for the value of a generator that
    appears only linearly, given values for every other generator.

    Used to recover phi on e_n / xi_n from the p-side values, one index at a time.
    """
    lin = expansion.terms.get((unknown,), 0)
    if lin == 0:
        raise ValueError(f"{unknown!r} has no linear term")
    rest = Poly({m: c for m, c in expansion.terms.items() if m != (unknown,)})
    if unknown in rest.generators():
        raise ValueError(f"{unknown!r} appears non-linearly")
    rest_val = rest.evaluate(lambda g: known[g], one=UniPoly.const(1), zero=UniPoly())
    return (target - rest_val).exact_div(lin)


def binomial_transform_phi(n: int) -> UniPoly:
    """phi(sum_a C(n,a) p[a,0]), computed from generator values."""
    return sum((phi_generator(("p", a, 0)) * comb(n, a) for a in range(1, n + 1)), UniPoly())
