# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from . import config, console, parallel

__all__ = ["config", "console", "parallel"]
