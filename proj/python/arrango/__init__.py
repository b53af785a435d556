"""Exact computations with hyperplane arrangements.

Arrangements come from the catalog (``by_name("A(9,1)")``) or from the text
file format (``parse(text)``). Hyperplane and chamber numbers are 0-based
here, unlike the command-line tool.
"""

from ._arrango import (
    Arrangement,
    ArrangementError,
    by_name,
    catalog_names,
    chamber_count,
    char_poly,
    check_suites,
    classify,
    coxeter_graphs,
    is_simplicial,
    lattice_isomorphism,
    parse,
    plot_svg,
    product,
    rank2_multiset,
    run_check,
    s_value,
    supersolvable,
)

__all__ = [
    "Arrangement",
    "ArrangementError",
    "by_name",
    "catalog_names",
    "chamber_count",
    "char_poly",
    "check_suites",
    "classify",
    "coxeter_graphs",
    "is_simplicial",
    "lattice_isomorphism",
    "parse",
    "plot_svg",
    "product",
    "rank2_multiset",
    "run_check",
    "s_value",
    "supersolvable",
]
