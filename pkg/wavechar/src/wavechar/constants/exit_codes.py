# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from typing import ClassVar


class ExitCodes:
    ok: ClassVar[int] = 0
    input_error: ClassVar[int] = 1
    numeric_error: ClassVar[int] = 2
