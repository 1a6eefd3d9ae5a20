"""Closed-form ASUA formulas for paths, cycles, stems and sea dragons."""

from asua.formulas.closed_forms import (
    cycle_asua,
    local_rule_degree3,
    local_rule_stem_branch,
    path_asua,
    sd1_asua,
    sd2_asua,
    sd3_asua,
    sd4_asua,
    sea_dragon_values,
    spine_asua,
    stem_offset,
)
from asua.formulas.spec import AttachedVertex, SeaDragonSpec

__all__ = [
    "AttachedVertex",
    "SeaDragonSpec",
    "cycle_asua",
    "local_rule_degree3",
    "local_rule_stem_branch",
    "path_asua",
    "sd1_asua",
    "sd2_asua",
    "sd3_asua",
    "sd4_asua",
    "sea_dragon_values",
    "spine_asua",
    "stem_offset",
]
