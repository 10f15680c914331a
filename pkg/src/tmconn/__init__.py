"""Exact tools for the total monochromatic connection number of small graphs."""

from .coloring import ColorTree, TotalColoring, TreeCollection, count_colors, is_tmc, waste
from .exact import TmcResult, tmc_exact
from .formulas import f_eval, g_eval
from .graph import Graph, complement, is_connected, predicates
from .graph6 import decode as graph6_decode, encode as graph6_encode
from .spanning import max_leaf_spanning_tree

__all__ = [
    "ColorTree",
    "Graph",
    "TmcResult",
    "TotalColoring",
    "TreeCollection",
    "complement",
    "count_colors",
    "f_eval",
    "g_eval",
    "graph6_decode",
    "graph6_encode",
    "is_connected",
    "is_tmc",
    "max_leaf_spanning_tree",
    "predicates",
    "tmc_exact",
    "waste",
]
