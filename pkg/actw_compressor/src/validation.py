# -*- coding: utf-8 -*-
# cython: language_level=3
# BSD 3-Clause License
#
# Copyright (c) 2021, Lucina
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# * Redistributions of source code must retain the above copyright notice, this
#   list of conditions and the following disclaimer.
#
# * Redistributions in binary form must reproduce the above copyright notice,
#   this list of conditions and the following disclaimer in the documentation
#   and/or other materials provided with the distribution.
#
# * Neither the name of the copyright holder nor the names of its
#   contributors may be used to endorse or promote products derived from
#   this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""Helper methods and constants used for validating parameters."""
from __future__ import annotations

__all__: list[str] = [
    "DEFAULT_DEPTH",
    "MAXIMUM_DEPTH",
    "MAXIMUM_PROBABILITY",
    "MINIMUM_DEPTH",
    "MINIMUM_PROBABILITY",
    "PROBABILITY_BITS",
    "validate_probability",
    "validate_unit_interval",
]

import math
import typing

MINIMUM_DEPTH: typing.Final[int] = 1
"""The inclusive minimum context tree depth."""
MAXIMUM_DEPTH: typing.Final[int] = 63
"""The inclusive maximum context tree depth (the header stores it in one byte)."""
DEFAULT_DEPTH: typing.Final[int] = 28

PROBABILITY_BITS: typing.Final[int] = 30
"""Fixed-point precision probabilities are quantized to before coding."""
MINIMUM_PROBABILITY: typing.Final[float] = 2.0**-PROBABILITY_BITS
"""The inclusive minimum probability handed to the coder."""
MAXIMUM_PROBABILITY: typing.Final[float] = 1.0 - MINIMUM_PROBABILITY
"""The inclusive maximum probability handed to the coder."""


def validate_unit_interval(value: float, /, *, name: str) -> float:
    """Check that a rate or schedule parameter lies in [0, 1)."""
    if not math.isfinite(value) or not 0.0 <= value < 1.0:
        raise ValueError(f"{name} must be greater than or equal to 0 and less than 1, not {value!r}")

    return value


def validate_probability(value: float, /, *, name: str = "theta") -> float:
    if not math.isfinite(value) or not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must be between 0 and 1 inclusive, not {value!r}")

    return value
