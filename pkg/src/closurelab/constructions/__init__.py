"""Extremal host graphs and checks of their claimed properties."""
from .bounded_degree import (TopBlock, TopBlockLayout, build_bounded_degree_gadget,
                             degree_excess_holds, layout_from_gadget, naive_blowups)
from .families import (StarCount, build_ary_tree, build_doubling_gadget, count_star_blowups,
                       coverage_subgraph, doubling_transversal, doubling_transversal_count,
                       subtree_form_blowups, subtree_form_count)
from .gadget import ALL_TAGS, CASE_TAGS, GadgetGraph, dump_gadget, load_gadget, read_gadget
from .induced import (UnifyingReport, build_induced_exponential_gadget, designated_assignment,
                      designated_blowup_sets, gadget_case, verify_unifying_conditions)

__all__ = [
    "ALL_TAGS", "CASE_TAGS", "GadgetGraph", "StarCount", "TopBlock", "TopBlockLayout",
    "UnifyingReport", "build_ary_tree", "build_bounded_degree_gadget", "build_doubling_gadget",
    "build_induced_exponential_gadget", "count_star_blowups", "coverage_subgraph",
    "degree_excess_holds", "designated_assignment", "designated_blowup_sets",
    "doubling_transversal", "doubling_transversal_count", "dump_gadget", "gadget_case",
    "layout_from_gadget", "load_gadget", "naive_blowups", "read_gadget", "subtree_form_blowups",
    "subtree_form_count", "verify_unifying_conditions",
]
