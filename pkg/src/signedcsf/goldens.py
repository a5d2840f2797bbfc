"""Golden worked examples, runnable as a conformance table."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from itertools import product
from typing import Callable

from . import bases
from .bases import (
    abs_coeff_sum,
    expand_augmented,
    expand_xi,
    expand_zeta,
    format_census,
    nonzero,
    p_to_xi,
    proj_pos,
    sink_census_from_expansion,
)
from .csf import csf, double_star, double_star_csf, star, star_csf
from .functionals import T, chromatic_poly, phi, zaslavsky_check
from .graph import SignedGraph, contract_edge, parse_graph, switch
from .orientations import acyclic_census, enumerate_orientations
from .posets import (
    SignedLinearExtension,
    example_poset,
    F_trunc,
    in_K,
    linear_extensions,
    phi_omega,
    verify_sink_lemma,
)
from .psym import p, x0


def load_graph(name: str) -> SignedGraph:
    """A bundled graph by file stem, e.g. ``load_graph('triangle')``."""
    text = resources.files("signedcsf").joinpath("graphs").joinpath(f"{name}.sg").read_text()
    return parse_graph(text)


def bundled_graphs() -> list[str]:
    root = resources.files("signedcsf").joinpath("graphs")
    return sorted(f.name[:-3] for f in root.iterdir() if f.name.endswith(".sg"))


@dataclass
class Check:
    name: str
    expected: str
    compute: Callable[[], str]


def _census(d) -> str:
    return format_census(d)


def _checks() -> list[Check]:
    tri = lambda: load_graph("triangle")  # noqa: E731
    utri = lambda: load_graph("unsigned_triangle")  # noqa: E731
    out = [
        Check(
            "deletion-contraction: X(triangle)",
            "p[1,0]^3 - p[1,0]p[1,1] - 2p[1,0]p[2,0] + 2p[2,1] + p[3,0] - x0^3",
            lambda: str(csf(load_graph("triangle_dc"))),
        ),
        Check("triangle: orientation count", "8", lambda: str(sum(1 for _ in enumerate_orientations(tri())))),
        Check("triangle: brute census", "{2:1, 1:4, 0:3}", lambda: _census(acyclic_census(tri()))),
        Check("triangle: phi(X)", "t^2 + 4t + 3", lambda: str(phi(csf(tri())))),
        Check(
            "triangle: augmented elementary expansion",
            str(bases.e(1) * bases.e(2) + bases.e(3) * 3 + bases.q(1, 1) * bases.e(1)
                + bases.q(2, 1) * 2 + bases.z() ** 3),
            lambda: str(expand_augmented(csf(tri()))),
        ),
        Check(
            "triangle: e-factor census",
            "{2:1, 1:4, 0:3}",
            lambda: _census(sink_census_from_expansion(expand_augmented(csf(tri())))),
        ),
        Check(
            "triangle: xi census",
            "{3:0, 2:1, 1:4, 0:3}",
            lambda: _census(sink_census_from_expansion(expand_xi(csf(tri())))),
        ),
        Check("triangle: sum |coefficients|", "8", lambda: str(abs_coeff_sum(csf(tri())))),
        Check("triangle: chi(-1)", "-8", lambda: str(zaslavsky_check(tri())[0])),
        Check("unsigned triangle: X", "p[1]^3 - 3p[1]p[2] + 2p[3]", lambda: str(proj_pos(csf(utri())))),
        Check(
            "unsigned triangle: zeta census",
            "{1:6}",
            lambda: _census(nonzero(sink_census_from_expansion(expand_zeta(csf(utri()))))),
        ),
        Check("unsigned triangle: brute census", "{1:6}", lambda: _census(acyclic_census(utri()))),
        Check("unsigned triangle: sum |coefficients|", "6", lambda: str(abs_coeff_sum(csf(utri())))),
        Check("negative loop: X", "p[1,0] - x0", lambda: str(csf(load_graph("negloop")))),
        Check("negative loop: phi(X)", "t + 1", lambda: str(phi(csf(load_graph("negloop"))))),
        Check("negative loop: chromatic", "2lambda", lambda: str(chromatic_poly(csf(load_graph("negloop"))))),
        Check("weighted negative loop: X", "p[3,0] - x0^3", lambda: str(csf(load_graph("negloop_heavy")))),
        Check("negative edge: X", "p[1,0]^2 - p[1,1]", lambda: str(csf(load_graph("negedge")))),
        Check("negative edge: phi(X)", "t^2 + 1", lambda: str(phi(csf(load_graph("negedge"))))),
        Check("p[2,0] in xi", "xi[2] - 2xi[1]", lambda: str(p_to_xi(2))),
        Check("p[3,0] in xi", "xi[3] - 3xi[2] + 3xi[1]", lambda: str(p_to_xi(3))),
        Check(
            "switching a negative edge",
            "E u v + ; weights (1, 0) (0, 1)",
            lambda: _switch_demo(),
        ),
        Check(
            "contracting ab in the triangle",
            "V ab 2 0 | V c | E ab c + | E ab c -",
            lambda: _contract_demo(),
        ),
        Check("S_4 csf vs closed form", "True", lambda: str(csf(load_graph("star4")) == star_csf(4))),
        Check(
            "S_2,3 csf vs closed form",
            "True",
            lambda: str(csf(load_graph("double_star_2_3")) == double_star_csf(2, 3)),
        ),
        Check("example poset: linear extensions", "4", lambda: str(len(linear_extensions(example_poset())))),
        Check("example poset: sum of phi_omega", "t^2", lambda: _example_phi_sum()),
        Check("example poset: four K-set descriptions", "True True True True", lambda: example_K_sets()),
        Check("2-vertex example: F_alpha == F_beta", "True", lambda: _F_equal_demo()),
    ]
    for k in range(7):
        out.append(Check(
            f"star S_{k}: csf & phi",
            f"True {(T - 1) + (T + 1) ** k}",
            lambda k=k: f"{csf(star(k)) == star_csf(k)} {phi(csf(star(k)))}",
        ))
    for n in range(4):
        for m in range(4):
            out.append(Check(
                f"double star S_{n},{m}: phi(X - X_Sn X_Sm)",
                str((T + 1) ** (n + m)),
                lambda n=n, m=m: str(phi(csf(double_star(n, m)) - star_csf(n) * star_csf(m))),
            ))
    out.append(Check(
        "three-vertex example graph: lemma checks",
        "True",
        lambda: str(verify_sink_lemma(load_graph("three_negative")).passed),
    ))
    return out


def _switch_demo() -> str:
    g = switch(load_graph("negedge"), "v")
    e = g.edges[0]
    return f"E {e.u} {e.v} {'+' if e.sign > 0 else '-'} ; weights {g.weight('u')} {g.weight('v')}"


def _contract_demo() -> str:
    # edges v1v2+, v1v3+, v2v3-; contracting v1v3 leaves a positive and a negative v1v2 edge
    g = contract_edge(load_graph("triangle_dc"), 1)
    g = g.relabel({"v1": "ab", "v2": "c"})
    canon = SignedGraph(g.vertices, g.weights, tuple(sorted(g.edges, key=lambda e: -e.sign)))
    canon = SignedGraph.build(
        canon.vertices,
        [(min(e.u, e.v), max(e.u, e.v), e.sign) for e in canon.edges],
        dict(zip(canon.vertices, canon.weights)),
    )
    return " | ".join(canon.to_text().strip().splitlines())


def _example_phi_sum() -> str:
    exts = linear_extensions(example_poset())
    omega = SignedLinearExtension.from_top_down(["+b", "+a", "+c", "-c", "-a", "-b"])
    return str(sum((phi_omega(a, omega) for a in exts), 0 * T))


EXAMPLE_EXTENSIONS = {
    "alpha": ["+b", "+a", "-c", "+c", "-a", "-b"],
    "beta": ["+c", "+b", "+a", "-a", "-b", "-c"],
    "gamma": ["+b", "+c", "+a", "-a", "-c", "-b"],
    "omega": ["+b", "+a", "+c", "-c", "-a", "-b"],
}

EXAMPLE_K_SETS = {
    "alpha": lambda a, b, c: b > a > -c >= 0,
    "beta": lambda a, b, c: c >= b > a > 0,
    "gamma": lambda a, b, c: b > c >= a > 0,
    "omega": lambda a, b, c: b > a > c > 0,
}


def example_K_sets(lam: int = 3) -> str:
    omega = SignedLinearExtension.from_top_down(EXAMPLE_EXTENSIONS["omega"])
    found = {str(x) for x in linear_extensions(example_poset())}
    out = []
    for name, labels in EXAMPLE_EXTENSIONS.items():
        alpha = SignedLinearExtension.from_top_down(labels)
        ok = str(alpha) in found
        for a, b, c in product(range(-lam, lam + 1), repeat=3):
            k = {"a": a, "b": b, "c": c}
            if in_K(k, alpha, omega) != EXAMPLE_K_SETS[name](a, b, c):
                ok = False
                break
        out.append(str(ok))
    return " ".join(out)


def _F_equal_demo() -> str:
    vs = ("v1", "v2")
    omega = SignedLinearExtension(vs, (1, 2))
    alpha = SignedLinearExtension(vs, (-1, 2))
    beta = SignedLinearExtension(vs, (2, -1))
    return str(F_trunc(alpha, omega, 3) == F_trunc(beta, omega, 3))


def run_suite() -> list[tuple[str, str, str, bool]]:
    rows = []
    for c in _checks():
        try:
            got = c.compute()
        except Exception as exc:  # reported as a failing row
            got = f"error: {exc!r}"
        rows.append((c.name, c.expected, got, got == c.expected))
    return rows


def format_rows(rows) -> str:
    width = max(len(r[0]) for r in rows)
    lines = []
    for name, expected, got, ok in rows:
        status = "PASS" if ok else "FAIL"
        line = f"{status}  {name:<{width}}  {got}"
        if not ok:
            line += f"   (expected {expected})"
        lines.append(line)
    passed = sum(r[3] for r in rows)
    lines.append(f"{passed}/{len(rows)} examples match")
    return "\n".join(lines)


__all__ = ["load_graph", "bundled_graphs", "run_suite", "format_rows", "p", "x0"]
