"""
Rainbow neighbourhoods and the exact J / J* solvers.
"""

from .neighbourhood import (
    RainbowCount,
    RainbowMode,
    is_rainbow_vertex,
    rainbow_neighbourhood_number,
    rainbow_vertices,
    required_mask,
    validate_rainbow_colouring,
)
from .solver import (
    JProfile,
    admits_j,
    certified_j_number,
    find_rainbow_colouring,
    j_number,
    j_profile,
    j_star_number,
    max_feasible_k,
    naive_profile,
    upper_bound,
)
from .trees import tree_jstar_colouring

__all__ = [
    "RainbowCount",
    "RainbowMode",
    "is_rainbow_vertex",
    "rainbow_neighbourhood_number",
    "rainbow_vertices",
    "required_mask",
    "validate_rainbow_colouring",
    "JProfile",
    "admits_j",
    "certified_j_number",
    "find_rainbow_colouring",
    "j_number",
    "j_profile",
    "j_star_number",
    "max_feasible_k",
    "naive_profile",
    "upper_bound",
    "tree_jstar_colouring",
]
