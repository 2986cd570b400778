# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause


class WavecharError(Exception):
    """Base class for every error raised by wavechar."""


class InputError(WavecharError):
    """Malformed files, flags or arguments; maps to exit status 1."""


class NumericError(WavecharError):
    """A numerical routine failed to reach its contract; maps to exit status 2."""
