"""Chromatic B-symmetric functions of signed graphs.

The main entry points are :func:`csf` (deletion-contraction in the p-basis),
:func:`phi` (sink census functional), the basis changes in :mod:`signedcsf.bases`
and the brute-force oracles in :mod:`signedcsf.orientations` and
:mod:`signedcsf.posets`.
"""

from .graph import SignedGraph, parse_graph, read_graph, switch, delete_edge, contract_edge, covering_graph
from .csf import csf, csf_oracle
from .functionals import phi, chromatic_poly
from .orientations import acyclic_census, enumerate_orientations, sinks

__version__ = "0.1.0"

__all__ = [
    "SignedGraph",
    "parse_graph",
    "read_graph",
    "switch",
    "delete_edge",
    "contract_edge",
    "covering_graph",
    "csf",
    "csf_oracle",
    "phi",
    "chromatic_poly",
    "acyclic_census",
    "enumerate_orientations",
    "sinks",
]
