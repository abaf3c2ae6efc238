"""Weighted ordinal dominance cones and efficient routes, in exact arithmetic.

Numbers come back as fractions.Fraction; ints, Fractions and strings such as
"3/4" or "0.25" are accepted wherever a number is expected.
"""

from ._core import (
    CategoryGraph,
    GraphError,
    NotPointed,
    OrdconeError,
    ParseError,
    PathCapExceeded,
    UnknownNode,
    WeightError,
    Weights,
    double_description,
    dominates,
    dual_contains,
    effective_cone,
    efficient_paths,
    extreme_rays,
    facet_count,
    facet_matrix,
    facet_selections,
    load_graph,
    merge_degenerate,
    nondominated,
    parse_graph,
    ray_membership,
    representation_matrix,
    spanning_rays,
    special_kinds,
    special_matrix,
    weakly_dominates,
    weight_sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
