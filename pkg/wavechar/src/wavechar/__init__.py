# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

__version__: str = "0.1.0"
