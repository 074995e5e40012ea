"""Input/output, report and logging helpers.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""
