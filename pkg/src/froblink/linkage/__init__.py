"""Generic linkage and the threshold comparison sweep.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from .generic import (
    LinkageData,
    build_generic_linkage,
    check_linkage,
    compare_lce_levelwise,
    origin_maximal_ideal,
)

__all__ = [
    "LinkageData",
    "build_generic_linkage",
    "check_linkage",
    "compare_lce_levelwise",
    "origin_maximal_ideal",
]
