#!/usr/bin/env python3
"""Compare phi(X_G) with the brute-force sink census over a corpus of small graphs.

    python scripts/census_sweep.py --max-vertices 3 --max-edges 4 --random 50
"""

from __future__ import annotations

import argparse
import logging
import random
import time
from dataclasses import dataclass

from signedcsf.corpus import all_signed_graphs, random_signed_graph
from signedcsf.csf import csf, csf_oracle
from signedcsf.functionals import phi
from signedcsf.orientations import acyclic_census
from signedcsf.psym import truncate_eval

log = logging.getLogger("census_sweep")


@dataclass
class SweepConfig:
    max_vertices: int = 3
    max_edges: int = 4
    random: int = 50
    random_vertices: int = 5
    random_edges: int = 6
    max_weight: int = 1
    seed: int = 0
    oracle: bool = False  # also compare against the coloring oracle (slower)


def corpus(cfg: SweepConfig):
    yield from all_signed_graphs(cfg.max_vertices, cfg.max_edges)
    rng = random.Random(cfg.seed)
    for _ in range(cfg.random):
        yield random_signed_graph(
            rng, cfg.random_vertices, cfg.random_edges, max_weight=cfg.max_weight
        )


def run(cfg: SweepConfig) -> int:
    t0 = time.perf_counter()
    n = failures = 0
    for g in corpus(cfg):
        n += 1
        f = csf(g)
        if phi(f).to_census() != acyclic_census(g):
            failures += 1
            log.error("census mismatch:\n%s", g.to_text())
        if cfg.oracle and truncate_eval(f, g.n) != csf_oracle(g, g.n):
            failures += 1
            log.error("oracle mismatch:\n%s", g.to_text())
    log.info("%d graphs, %d failures, %.1fs", n, failures, time.perf_counter() - t0)
    return failures


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SweepConfig()
    for name, value in vars(defaults).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(value, bool):
            ap.add_argument(flag, action="store_true")
        else:
            ap.add_argument(flag, type=type(value), default=value)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    cfg = SweepConfig(**vars(args))
    raise SystemExit(1 if run(cfg) else 0)


if __name__ == "__main__":
    main()
