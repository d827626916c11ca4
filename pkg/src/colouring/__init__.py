"""
Proper colourings, exact chromatic number and the χ⁻ / χ⁺ conventions.
"""

from .base import (
    Colouring,
    ColourStats,
    colour_stats,
    count_proper_colourings,
    enumerate_proper_colourings,
    format_colouring,
    invert_colouring,
    is_proper,
    normalise_colouring,
    parse_colouring,
)
from .chromatic import (
    ChromaticResult,
    chi_minus_colouring,
    chi_plus_colouring,
    chromatic_number,
    clique_number,
    dsatur_colouring,
)

__all__ = [
    "Colouring",
    "ColourStats",
    "colour_stats",
    "count_proper_colourings",
    "enumerate_proper_colourings",
    "format_colouring",
    "invert_colouring",
    "is_proper",
    "normalise_colouring",
    "parse_colouring",
    "ChromaticResult",
    "chi_minus_colouring",
    "chi_plus_colouring",
    "chromatic_number",
    "clique_number",
    "dsatur_colouring",
]
