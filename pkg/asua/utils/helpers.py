"""Utility functions for asua."""

from fractions import Fraction
from pathlib import Path


def ensure_dir(path: Path) -> Path:
    """Ensure a directory exists, creating it if necessary."""
    path.mkdir(parents=True, exist_ok=True)
    return path


def format_rational(value: Fraction) -> str:
    """Render as ``p/q`` (integers keep the ``/1``)."""
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, digits: int = 12) -> str:
    """
    Render a rational with a fixed number of decimals.

    Rounds half away from zero on the exact value, so the text is identical
    on every platform.
    """
    scale = 10**digits
    scaled = abs(value) * scale
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    sign = "-" if value < 0 and q else ""
    whole, frac = divmod(q, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, an integer, or a plain decimal into a Fraction."""
    text = text.strip()
    if not text:
        raise ValueError("empty number")
    return Fraction(text)


def parse_int_range(text: str) -> range:
    """
    Parse an inclusive range such as ``2..50`` or a single integer ``7``.

    Returns:
        A Python range covering both endpoints.
    """
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        start, stop = int(lo), int(hi)
    else:
        start = stop = int(text)
    if stop < start:
        raise ValueError(f"empty range: {text}")
    return range(start, stop + 1)


def parse_int_list(text: str) -> list[int]:
    """Parse a comma-separated integer list; an empty string gives []."""
    return [int(part) for part in text.split(",") if part.strip()]
