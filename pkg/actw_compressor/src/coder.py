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
"""Binary arithmetic coder driven by an external per-bit probability.

The interval lives in 64-bit integer registers with pending-bit (underflow) handling.
Probabilities are quantized to 30-bit fixed point before the interval is split so the
bitstream only ever depends on integer arithmetic. The sub-interval for a 1 sits below
the one for a 0.
"""
from __future__ import annotations

__all__: list[str] = ["ArithmeticDecoder", "ArithmeticEncoder", "quantize"]

import typing

from . import bitio
from . import errors
from . import validation

_REGISTER_BITS: typing.Final[int] = 64
_FULL: typing.Final[int] = (1 << _REGISTER_BITS) - 1
_HALF: typing.Final[int] = 1 << (_REGISTER_BITS - 1)
_QUARTER: typing.Final[int] = 1 << (_REGISTER_BITS - 2)
_THREE_QUARTERS: typing.Final[int] = _HALF + _QUARTER
_ONE: typing.Final[int] = 1 << validation.PROBABILITY_BITS


def quantize(p1: float, /) -> int:
    """Convert a probability to the coder's fixed-point representation.

    Raises
    ------
    errors.ParameterError
        If `p1` is outside of [2^-30, 1 - 2^-30].
    """
    if not validation.MINIMUM_PROBABILITY <= p1 <= validation.MAXIMUM_PROBABILITY:
        raise errors.ParameterError(f"probability must be in [2^-30, 1 - 2^-30], not {p1!r}")

    return min(max(int(p1 * _ONE), 1), _ONE - 1)


class ArithmeticEncoder:
    __slots__: tuple[str, ...] = ("_flushed", "_high", "_low", "_pending", "_writer")

    def __init__(self, writer: typing.Optional[bitio.BitWriter] = None, /) -> None:
        self._flushed = False
        self._high = _FULL
        self._low = 0
        self._pending = 0
        self._writer = writer or bitio.BitWriter()

    @property
    def bits_written(self) -> int:
        return self._writer.bits_written

    def _emit(self, bit: int, /) -> None:
        self._writer.write(bit)
        if self._pending:
            self._writer.write_run(bit ^ 1, self._pending)
            self._pending = 0

    def encode_bit(self, bit: int, p1: float, /) -> None:
        """Narrow the interval to `bit`'s share given that a 1 has probability `p1`."""
        if self._flushed:
            raise errors.CoderStateError("cannot encode with an encoder that has already been flushed")

        low = self._low
        high = self._high
        split = ((high - low + 1) * quantize(p1)) >> validation.PROBABILITY_BITS
        if bit:
            high = low + split - 1

        else:
            low = low + split

        while True:
            if high < _HALF:
                self._emit(0)

            elif low >= _HALF:
                self._emit(1)
                low -= _HALF
                high -= _HALF

            elif low >= _QUARTER and high < _THREE_QUARTERS:
                self._pending += 1
                low -= _QUARTER
                high -= _QUARTER

            else:
                break

            low <<= 1
            high = (high << 1) | 1

        self._low = low
        self._high = high

    def flush(self) -> None:
        """Write out the low register in full so the decoder can resolve every coded bit."""
        if self._flushed:
            raise errors.CoderStateError("encoder has already been flushed")

        self._flushed = True
        low = self._low
        self._emit(low >> (_REGISTER_BITS - 1))
        for shift in range(_REGISTER_BITS - 2, -1, -1):
            self._writer.write((low >> shift) & 1)

    def getvalue(self) -> bytes:
        return self._writer.getvalue()


class ArithmeticDecoder:
    __slots__: tuple[str, ...] = ("_code", "_high", "_low", "_reader")

    def __init__(self, source: typing.Union[bytes, bitio.BitReader], /) -> None:
        self._reader = bitio.BitReader(source) if isinstance(source, bytes) else source
        self._high = _FULL
        self._low = 0
        code = 0
        for _ in range(_REGISTER_BITS):
            code = (code << 1) | self._reader.read()

        self._code = code

    def decode_bit(self, p1: float, /) -> int:
        """Decode the next bit; `p1` must match what the encoder used at this position.

        Raises
        ------
        errors.TruncatedStreamError
            If the payload runs out.
        """
        low = self._low
        high = self._high
        code = self._code
        split = ((high - low + 1) * quantize(p1)) >> validation.PROBABILITY_BITS
        if code < low + split:
            bit = 1
            high = low + split - 1

        else:
            bit = 0
            low = low + split

        read = self._reader.read
        while True:
            if high < _HALF:
                pass

            elif low >= _HALF:
                low -= _HALF
                high -= _HALF
                code -= _HALF

            elif low >= _QUARTER and high < _THREE_QUARTERS:
                low -= _QUARTER
                high -= _QUARTER
                code -= _QUARTER

            else:
                break

            low <<= 1
            high = (high << 1) | 1
            code = (code << 1) | read()

        self._low = low
        self._high = high
        self._code = code
        return bit
