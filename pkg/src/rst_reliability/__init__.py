"""Exact three-terminal (r, s, t) reliability of small graphs."""

__version__ = "0.1.0"

from .graph import (
    BudgetExceeded,
    LabeledGraph,
    canonical_key,
    complete_graph,
    count_nontarget_subgraphs,
    enumerate_gnm,
    format_graph,
    from_complete_minus,
    gnm_classes,
    parse_graph,
)
from .reliability import CoeffVector, coeffs, evaluate, mc_estimate
from .families import build_family, family_A, family_Aprime, family_Astar, family_X, family_Y, family_Z
from .compare import classify_pair, find_local_opt, find_umrg
from .cutsets import enumerate_minimal_cutsets, lambda_rst

__all__ = [
    "BudgetExceeded",
    "CoeffVector",
    "LabeledGraph",
    "build_family",
    "canonical_key",
    "classify_pair",
    "coeffs",
    "complete_graph",
    "count_nontarget_subgraphs",
    "enumerate_gnm",
    "enumerate_minimal_cutsets",
    "evaluate",
    "family_A",
    "family_Aprime",
    "family_Astar",
    "family_X",
    "family_Y",
    "family_Z",
    "find_local_opt",
    "find_umrg",
    "format_graph",
    "from_complete_minus",
    "gnm_classes",
    "lambda_rst",
    "mc_estimate",
    "parse_graph",
]
