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
"""Exceptions raised by the compressor and its tooling."""
from __future__ import annotations

__all__: list[str] = [
    "ACTWError",
    "CoderStateError",
    "FormatError",
    "ParameterError",
    "TruncatedStreamError",
    "UndefinedMetricError",
]


class ACTWError(Exception):
    """Base class for all errors raised by this package."""

    __slots__: tuple[str, ...] = ("message",)

    def __init__(self, message: str, /) -> None:
        self.message = message

    def __str__(self) -> str:
        return self.message


class ParameterError(ACTWError, ValueError):
    """Raised when a numeric parameter is outside of its allowed range."""

    __slots__: tuple[str, ...] = ()


class UndefinedMetricError(ParameterError):
    __slots__: tuple[str, ...] = ()


class FormatError(ACTWError):
    """Raised when a compressed stream doesn't match the container format."""

    __slots__: tuple[str, ...] = ()


class TruncatedStreamError(FormatError):
    __slots__: tuple[str, ...] = ()


class CoderStateError(ACTWError):
    """Raised when an encoder is used after it has been flushed."""

    __slots__: tuple[str, ...] = ()
