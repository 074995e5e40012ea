"""Contains the configuration of a sweep run.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import dataclasses
from pathlib import Path

from froblink.algebra.params import Budgets
from froblink.utils.report import ReportFormat


@dataclasses.dataclass
class RunConfig:
    """Parameters of `froblink sweep`."""

    # Ideal file with integer coefficients.
    input_path: Path
    # Primes to reduce the ideal at.
    primes: tuple[int, ...]
    # Levels 1..e_max are computed for every prime.
    e_max: int
    # Directory receiving report.csv / report.md.
    output_dir: Path
    formats: tuple[ReportFormat, ...] = ("csv", "md")
    budgets: Budgets = dataclasses.field(default_factory=Budgets)
    # Binary-search nu_bracket when the profile one level below is monotone.
    fast_search: bool = False
    # Use the strongly F-pure exponent ceil(t q) in the per-row F-purity check.
    strong_f_pure: bool = False
    # Worker processes; 1 runs in the calling process.
    jobs: int = 1

    def __post_init__(self):
        """Validate parameters."""
        if not self.primes:
            raise ValueError("At least one prime is required.")
        if any(p < 2 for p in self.primes):
            raise ValueError(f"Primes must be at least 2, got {self.primes}.")
        if self.e_max < 1:
            raise ValueError(f"e_max must be at least 1, got {self.e_max}.")
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}.")
        if not self.formats:
            raise ValueError("At least one report format is required.")
