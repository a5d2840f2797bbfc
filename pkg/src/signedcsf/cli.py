"""Command-line front end: ``signedcsf <subcommand> FILE [flags]``.

Exit codes: 0 ok, 2 parse error, 3 size bound exceeded, 4 invariant or
lemma violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bases import KINDS, expand, format_census, sink_census_from_expansion
from .csf import csf
from .functionals import UniPoly, chromatic_poly, phi
from .graph import GraphError, SignedGraph, covering_graph, read_graph
from .orientations import acyclic_census, enumerate_orientations, is_acyclic, sinks
from .posets import DEFAULT_D_MAX, LEMMAS, SizeBoundError, verify_sink_lemma
from .psym import to_json

EXIT_PARSE = 2
EXIT_SIZE = 3
EXIT_INVARIANT = 4

# brute-force orientation enumeration visits 2^(#edges) configurations
MAX_BRUTE_EDGES = 22


def _load(path: str) -> SignedGraph:
    if path == "-":
        from .graph import parse_graph

        return parse_graph(sys.stdin.read())
    return read_graph(path)


def _check_brute_size(g: SignedGraph) -> None:
    if len(g.edges) > MAX_BRUTE_EDGES:
        raise SizeBoundError(
            f"{len(g.edges)} edges exceeds the brute-force bound of {MAX_BRUTE_EDGES}"
        )


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _census_json(census: dict[int, int]) -> dict[str, int]:
    return {str(k): census[k] for k in sorted(census, reverse=True)}


def cmd_csf(args) -> int:
    g = _load(args.file)
    f = csf(g, memo=args.memo, threads=args.threads)
    if args.json:
        print(to_json(f))
    else:
        print(f)
    return 0


def cmd_basis(args) -> int:
    g = _load(args.file)
    x = expand(csf(g, memo=args.memo, threads=args.threads), args.kind)
    census = sink_census_from_expansion(x)
    text = str(x)
    if args.census:
        text += "\n" + format_census(census)
    payload = {"kind": x.kind, "expansion": str(x)}
    if args.census:
        payload["census"] = _census_json(census)
    _emit(args, text, payload)
    return 0


def cmd_sinks(args) -> int:
    g = _load(args.file)
    poly = phi(csf(g, memo=args.memo, threads=args.threads))
    lines = [str(poly)]
    payload = {"phi": str(poly), "coefficients": list(poly.coeffs)}
    status = 0
    if args.brute:
        _check_brute_size(g)
        brute = UniPoly.from_census(acyclic_census(g))
        diff = poly - brute
        lines.append(f"brute: {brute}")
        lines.append(f"diff:  {diff}")
        payload.update(brute=str(brute), diff=str(diff))
        if diff.coeffs:
            status = EXIT_INVARIANT
    _emit(args, "\n".join(lines), payload)
    return status


def cmd_chromatic(args) -> int:
    g = _load(args.file)
    chi = chromatic_poly(csf(g, memo=args.memo, threads=args.threads))
    if args.lam is None:
        _emit(args, str(chi), {"chromatic": str(chi), "coefficients": list(chi.coeffs)})
    else:
        vals = {lam: chi(lam) for lam in args.lam}
        text = "\n".join(f"chi({lam}) = {v}" for lam, v in vals.items())
        _emit(args, text, {str(k): v for k, v in vals.items()})
    return 0


def cmd_orientations(args) -> int:
    g = _load(args.file)
    _check_brute_size(g)
    rows = []
    for o in enumerate_orientations(g):
        acyc = is_acyclic(o)
        rows.append((str(o), acyc, sorted(sinks(o)) if acyc else None))
    n_acyc = sum(1 for r in rows if r[1])
    if args.json:
        print(json.dumps({
            "total": len(rows),
            "acyclic": n_acyc,
            "orientations": [
                {"config": c, "acyclic": a, "sinks": s} for c, a, s in rows
            ] if args.list else None,
        }, sort_keys=True))
        return 0
    if args.list:
        for c, a, s in rows:
            tag = f"acyclic  sinks={{{', '.join(s)}}}" if a else "cyclic"
            print(f"[{c}]  {tag}")
    print(f"{len(rows)} orientations, {n_acyc} acyclic")
    return 0


def cmd_census(args) -> int:
    g = _load(args.file)
    _check_brute_size(g)
    census = acyclic_census(g)
    _emit(args, format_census(census), _census_json(census))
    return 0


def cmd_cover(args) -> int:
    g = _load(args.file)
    cg = covering_graph(g)
    rows = [(str(x), str(y), i) for x, y, i in cg.edges]
    text = "\n".join(f"{x} -- {y}  (edge {i})" for x, y, i in rows)
    _emit(args, text, {"vertices": [str(x) for x in cg.vertices], "edges": rows})
    return 0


def cmd_verify(args) -> int:
    g = _load(args.file)
    lemmas = [s.strip() for s in args.lemmas.split(",") if s.strip()]
    bad = [s for s in lemmas if s not in LEMMAS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown lemma(s): {', '.join(bad)}")
    report = verify_sink_lemma(g, lemmas, d_max=args.d_max)
    if args.json:
        print(json.dumps({
            name: {"passed": r.passed, "checks": r.checks, "witness": r.witness}
            for name, r in report.results.items()
        }, sort_keys=True))
    else:
        print("\n".join(report.lines()))
    return 0 if report.passed else EXIT_INVARIANT


def cmd_goldens(args) -> int:
    from .goldens import format_rows, run_suite

    rows = run_suite()
    if args.json:
        print(json.dumps([
            {"name": n, "expected": e, "got": g, "passed": ok} for n, e, g, ok in rows
        ]))
    else:
        print(format_rows(rows))
    return 0 if all(r[3] for r in rows) else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1, help="worker processes for csf")
    common.add_argument("--memo", action="store_true", help="memoise csf on graph keys")

    ap = argparse.ArgumentParser(
        prog="signedcsf", description="Chromatic B-symmetric functions of signed graphs."
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_, with_file=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if with_file:
            sp.add_argument("file", help="graph file ('-' for stdin)")
        sp.set_defaults(func=func)
        return sp

    add("csf", cmd_csf, "X_G in the p-basis")
    sp = add("basis", cmd_basis, "expansion in the elementary, xi or zeta basis")
    sp.add_argument("--kind", choices=KINDS, default="elementary")
    sp.add_argument("--census", action="store_true", help="also print the sink census")
    sp = add("sinks", cmd_sinks, "sink generating polynomial phi(X_G)")
    sp.add_argument("--brute", action="store_true", help="compare with orientation enumeration")
    sp = add("chromatic", cmd_chromatic, "signed chromatic polynomial")
    sp.add_argument("--lambda", dest="lam", type=int, action="append",
                    help="evaluate at this lambda (repeatable)")
    sp = add("orientations", cmd_orientations, "count (or list) orientations")
    sp.add_argument("--list", action="store_true")
    add("census", cmd_census, "brute-force sink census of acyclic orientations")
    add("cover", cmd_cover, "covering graph edge list")
    sp = add("verify", cmd_verify, "check the sink-counting lemmas on every acyclic orientation")
    sp.add_argument("--lemmas", default="sink,partition",
                    help=f"comma-separated subset of {','.join(LEMMAS)}")
    sp.add_argument("--d-max", type=int, default=DEFAULT_D_MAX,
                    help="largest vertex count for extension enumeration")
    add("paper-suite", cmd_goldens, "run the bundled worked examples", with_file=False)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except AssertionError as exc:  # includes AmbiguousCaseError
        print(f"error: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    raise SystemExit(main())
