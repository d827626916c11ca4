"""
Extremal edge-removal quantities: bonding variables, minimal repair, closed forms.
"""

from .bonding import BondingProfile, BondingResult, BondingRow, bonding_profile, bonding_result, r_minus, r_plus
from .closed_forms import (
    K9_EXPECTED_CUMULATIVE,
    K9_EXPECTED_J,
    K9_REMOVAL_SCHEDULE,
    KnBonding,
    ScheduleStage,
    apply_removal_schedule,
    kn_bonding_closed_form,
)
from .repair import RepairResult, minimal_repair, repair_profile
from .search import EdgeSubsetSearch, Semantics, has_j_value, removal_size_range

__all__ = [
    "BondingProfile",
    "BondingResult",
    "BondingRow",
    "bonding_profile",
    "bonding_result",
    "r_minus",
    "r_plus",
    "K9_EXPECTED_CUMULATIVE",
    "K9_EXPECTED_J",
    "K9_REMOVAL_SCHEDULE",
    "KnBonding",
    "ScheduleStage",
    "apply_removal_schedule",
    "kn_bonding_closed_form",
    "RepairResult",
    "minimal_repair",
    "repair_profile",
    "EdgeSubsetSearch",
    "Semantics",
    "has_j_value",
    "removal_size_range",
]
