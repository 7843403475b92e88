"""Two-dimensional variation on finite planar sets.

Points are pairs of exact coordinates given as int, str ("p/q") or
fractions.Fraction; function values are complex numbers listed in point order.
"""

from ._core import (
    BudgetExceeded,
    Error,
    bv_norm,
    cantor_homeomorphism,
    cvar,
    folding_map,
    is_affine,
    lg_norm,
    parse_points,
    pushforward,
    reproduce,
    scenario_ids,
    var_1d,
    var_exact,
    var_search,
    vf,
    vf_ratio,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "bv_norm",
    "cantor_homeomorphism",
    "cvar",
    "folding_map",
    "is_affine",
    "lg_norm",
    "parse_points",
    "pushforward",
    "reproduce",
    "scenario_ids",
    "var_1d",
    "var_exact",
    "var_search",
    "vf",
    "vf_ratio",
]
