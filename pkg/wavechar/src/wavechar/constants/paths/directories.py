# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from dataclasses import dataclass
from pathlib import Path

_PACKAGE_DIR: Path = Path(__file__).parent.parent.parent.resolve()


@dataclass(frozen=True)
class Directories:
    schemas: Path = _PACKAGE_DIR / "data" / "schemas"
