# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from .defaults import Defaults
from .exit_codes import ExitCodes

__all__ = [
    "Defaults",
    "ExitCodes",
]
