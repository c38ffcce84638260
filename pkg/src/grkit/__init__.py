"""Gallai-Ramsey toolkit: exact formulas, witness constructions, Gallai partitions and search."""

from .core import (CATALOG, ColoredCompleteGraph, FormatError, GraphError, Pattern, RoleAssignment,
                   circulant, get_pattern, induced, join_two_copies, monochromatic, new_graph, parse,
                   read_gcg, serialize, substitute, write_gcg)
from .detect import (WitnessReport, check_merge_condition, find_mono_copy, find_rainbow_triangle,
                     validate_forbidden, validate_witness)
from .formulas import case_of_f, case_of_w, f, gr_main, ramsey_constant, w
from .gallai import (RainbowTriangleError, gallai_partition, is_gallai_partition,
                     peel_uniform_vertices, reduced_graph, smallest_module)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CATALOG", "ColoredCompleteGraph", "FormatError", "GraphError", "Pattern",
    "RainbowTriangleError", "RoleAssignment", "WitnessReport", "case_of_f", "case_of_w",
    "check_merge_condition", "circulant", "f", "find_mono_copy", "find_rainbow_triangle",
    "gallai_partition", "get_pattern", "gr_main", "induced", "is_gallai_partition",
    "join_two_copies", "monochromatic", "new_graph", "parse", "peel_uniform_vertices",
    "ramsey_constant", "read_gcg", "reduced_graph", "serialize", "smallest_module", "substitute",
    "validate_forbidden", "validate_witness", "w", "write_gcg",
]
