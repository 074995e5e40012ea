"""Frobenius powers, roots and F-threshold invariants.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from .powers import (
    FrobeniusDigits,
    RealPowerRequest,
    bracket_power,
    frobenius_digits,
    frobenius_root,
    generalized_power,
    nu_bracket,
    rational_power,
    real_power,
)
from .thresholds import (
    ThresholdRow,
    ThresholdTable,
    TestIdealResult,
    fpt_estimate,
    lce_estimate,
    nu_power,
)

__all__ = [
    "FrobeniusDigits",
    "RealPowerRequest",
    "TestIdealResult",
    "ThresholdRow",
    "ThresholdTable",
    "bracket_power",
    "fpt_estimate",
    "frobenius_digits",
    "frobenius_root",
    "generalized_power",
    "lce_estimate",
    "nu_bracket",
    "nu_power",
    "rational_power",
    "real_power",
]
