# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from .dataset_files import DatasetFiles
from .directories import Directories
from .json_schemas import JsonSchemas

__all__ = ["DatasetFiles", "Directories", "JsonSchemas"]
