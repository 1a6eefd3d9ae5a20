"""Formula sweeps and the extremal tree survey."""

from asua.verify.survey import (
    ABSORBER_CONVENTIONS,
    PAIR_CONVENTIONS,
    Extremes,
    SurveyReport,
    TreeRow,
    diametral_pair,
    survey,
    survey_order,
)
from asua.verify.sweeps import FAMILIES, Mismatch, VerifyReport, stem_partitions, verify_family

__all__ = [
    "ABSORBER_CONVENTIONS",
    "FAMILIES",
    "PAIR_CONVENTIONS",
    "Extremes",
    "Mismatch",
    "SurveyReport",
    "TreeRow",
    "VerifyReport",
    "diametral_pair",
    "stem_partitions",
    "survey",
    "survey_order",
    "verify_family",
]
