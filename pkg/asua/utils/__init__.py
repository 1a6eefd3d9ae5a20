"""Utility functions for asua."""

from asua.utils.helpers import (
    ensure_dir,
    format_decimal,
    format_rational,
    parse_int_list,
    parse_int_range,
    parse_rational,
)

__all__ = [
    "ensure_dir",
    "format_decimal",
    "format_rational",
    "parse_int_list",
    "parse_int_range",
    "parse_rational",
]
