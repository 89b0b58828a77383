"""Tropical D-Groebner bases via Matrix-F5 over fields with p-adic valuation."""

from ._core import (
    TgbError,
    TgbParseError,
    TgbPrecisionError,
    parse_problem,
    run,
    run_experiment,
)

__all__ = [
    "TgbError",
    "TgbParseError",
    "TgbPrecisionError",
    "parse_problem",
    "run",
    "run_experiment",
]
