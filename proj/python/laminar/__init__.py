"""Python access to the laminar core library.

Rational results come back as fractions.Fraction, big counts as int.
"""

from ._core import (
    BoundTable,
    CacheError,
    ScaleError,
    affine_plane,
    circle_geometry,
    circle_tower,
    contains_forbidden,
    fano_tower,
    greedy_packing,
    is_design,
    is_t_laminar,
    laminarity_witness,
    load_cache,
    lp_dual_value,
    lp_primal_value,
    max_laminar_classic,
    max_laminar_exact,
    obf_table,
    projective_plane,
    projective_series,
    seven_series,
    three_series_report,
    unique_chain_check,
)

__all__ = [
    "BoundTable",
    "CacheError",
    "ScaleError",
    "affine_plane",
    "circle_geometry",
    "circle_tower",
    "contains_forbidden",
    "fano_tower",
    "greedy_packing",
    "is_design",
    "is_t_laminar",
    "laminarity_witness",
    "load_cache",
    "lp_dual_value",
    "lp_primal_value",
    "max_laminar_classic",
    "max_laminar_exact",
    "obf_table",
    "projective_plane",
    "projective_series",
    "seven_series",
    "three_series_report",
    "unique_chain_check",
]
