"""Exact Frobenius-power and generic-linkage computations over F_p.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""
