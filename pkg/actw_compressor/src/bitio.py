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
"""MSB-first bit sink and source used by the arithmetic coder."""
from __future__ import annotations

__all__: list[str] = ["BitReader", "BitWriter"]

from . import errors


class BitWriter:
    __slots__: tuple[str, ...] = ("_buffer", "_current", "_filled", "bits_written")

    def __init__(self) -> None:
        self._buffer = bytearray()
        self._current = 0
        self._filled = 0
        self.bits_written = 0

    def write(self, bit: int, /) -> None:
        self._current = (self._current << 1) | bit
        self._filled += 1
        self.bits_written += 1
        if self._filled == 8:
            self._buffer.append(self._current)
            self._current = 0
            self._filled = 0

    def write_run(self, bit: int, count: int, /) -> None:
        for _ in range(count):
            self.write(bit)

    def getvalue(self) -> bytes:
        """The bits written so far, with the final byte padded out by zero bits."""
        if self._filled:
            return bytes(self._buffer) + bytes(((self._current << (8 - self._filled)) & 0xFF,))

        return bytes(self._buffer)


class BitReader:
    __slots__: tuple[str, ...] = ("_data", "_position", "_size")

    def __init__(self, data: bytes, /) -> None:
        self._data = data
        self._position = 0
        self._size = len(data) * 8

    @property
    def bits_read(self) -> int:
        return self._position

    def read(self) -> int:
        """Read the next bit.

        Raises
        ------
        errors.TruncatedStreamError
            If every bit has already been read.
        """
        position = self._position
        if position >= self._size:
            raise errors.TruncatedStreamError("compressed payload ended before every bit was decoded")

        self._position = position + 1
        return (self._data[position >> 3] >> (7 - (position & 7))) & 1
