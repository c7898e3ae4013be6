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
"""File-level compressor: container format plus the predict, code, update loop."""
from __future__ import annotations

__all__: list[str] = [
    "CodecHeader",
    "EncodeResult",
    "HEADER_SIZE",
    "MAGIC",
    "VERSION",
    "compress",
    "compress_file",
    "decode_bits",
    "decompress",
    "decompress_file",
    "encode",
    "encode_bits",
    "read_header",
    "space_saving",
]

import logging
import math
import struct
import typing

import pydantic

from . import coder
from . import context_tree
from . import errors
from . import estimator
from . import models
from . import utilities
from . import validation

if typing.TYPE_CHECKING:
    import collections.abc as collections
    import pathlib

    from . import protos

MAGIC: typing.Final[bytes] = b"ACTW"
VERSION: typing.Final[int] = 1
_HEADER: typing.Final[struct.Struct] = struct.Struct("<4sBBBddQ")
HEADER_SIZE: typing.Final[int] = _HEADER.size
"""Size of the container header in bytes."""

_LOGGER = logging.getLogger("actw.codec")
_LN2: typing.Final[float] = math.log(2.0)


class CodecHeader(pydantic.BaseModel):
    """Metadata written in front of every compressed payload."""

    variant: models.VariantKind
    depth: int = pydantic.Field(..., ge=validation.MINIMUM_DEPTH, le=validation.MAXIMUM_DEPTH)
    param1: float = 0.0
    param2: float = 0.0
    original_length: int = pydantic.Field(..., ge=0, lt=1 << 64)

    Config = models.ModelConfig

    @pydantic.validator("param1", "param2")
    def validate_param(cls, value: float, field: pydantic.fields.ModelField) -> float:
        return validation.validate_unit_interval(value, name=field.name)

    @pydantic.root_validator(skip_on_failure=True)
    def validate_unused_params(cls, values: dict[str, typing.Any]) -> dict[str, typing.Any]:
        variant = values["variant"]
        if variant is models.VariantKind.CTW:
            unused = ("param1", "param2")

        elif variant is models.VariantKind.FIXED_RATE:
            unused = ("param2",)

        else:
            unused = ()

        for name in unused:
            if values[name] != 0.0:
                raise ValueError(f"{name} must be 0 for the {variant.name.lower()} variant, not {values[name]!r}")

        return values

    @classmethod
    def for_config(cls, config: models.VariantConfig, original_length: int, /) -> CodecHeader:
        param1, param2 = config.params
        return cls(
            variant=config.kind,
            depth=config.depth,
            param1=param1,
            param2=param2,
            original_length=original_length,
        )

    def pack(self) -> bytes:
        return _HEADER.pack(
            MAGIC, VERSION, int(self.variant), self.depth, self.param1, self.param2, self.original_length
        )

    @classmethod
    def unpack(cls, data: bytes, /) -> CodecHeader:
        """Parse and validate a header.

        Raises
        ------
        errors.TruncatedStreamError
            If there are fewer bytes than a header.
        errors.FormatError
            If the magic, version, variant byte, depth or parameters are invalid.
        """
        if len(data) < HEADER_SIZE:
            raise errors.TruncatedStreamError(f"stream is shorter than the {HEADER_SIZE} byte header")

        magic, version, variant, depth, param1, param2, original_length = _HEADER.unpack_from(data)
        if magic != MAGIC:
            raise errors.FormatError(f"bad magic {magic!r}, expected {MAGIC!r}")

        if version != VERSION:
            raise errors.FormatError(f"unsupported format version {version}")

        try:
            header = cls(
                variant=variant, depth=depth, param1=param1, param2=param2, original_length=original_length
            )
            header.to_config()

        except pydantic.ValidationError as exc:
            raise errors.FormatError(f"invalid header: {exc}") from None

        return header

    def to_config(self) -> models.VariantConfig:
        return models.VariantConfig.from_params(self.variant, self.param1, self.param2, depth=self.depth)


class EncodeResult(pydantic.BaseModel):
    payload: bytes
    payload_bits: int
    """Bits emitted by the coder before byte padding."""
    model_bits: float
    """Ideal code length under the model, -log2 of the tree's joint probability."""


def _iter_bits(data: bytes, /) -> collections.Iterator[int]:
    for byte in data:
        for shift in range(7, -1, -1):
            yield (byte >> shift) & 1


def encode_bits(
    predictor: protos.BitPredictor, bits: collections.Iterable[int], encoder: coder.ArithmeticEncoder, /
) -> None:
    for bit in bits:
        encoder.encode_bit(bit, estimator.clamp_probability(predictor.predict()))
        predictor.update(bit)


def decode_bits(
    predictor: protos.BitPredictor, count: int, decoder: coder.ArithmeticDecoder, /
) -> collections.Iterator[int]:
    for _ in range(count):
        bit = decoder.decode_bit(estimator.clamp_probability(predictor.predict()))
        predictor.update(bit)
        yield bit


def encode(data: bytes, config: models.VariantConfig, /) -> EncodeResult:
    """Code `data` (flattened MSB-first) without a header."""
    tree = context_tree.ContextTree(config)
    encoder = coder.ArithmeticEncoder()
    encode_bits(tree, _iter_bits(data), encoder)
    encoder.flush()
    return EncodeResult(
        payload=encoder.getvalue(), payload_bits=encoder.bits_written, model_bits=-tree.joint_logprob() / _LN2
    )


def compress(data: bytes, config: models.VariantConfig, /) -> bytes:
    result = encode(data, config)
    header = CodecHeader.for_config(config, len(data))
    _LOGGER.debug(
        "compressed %s bytes to %s with %s (model bound %.1f bits, coded %s bits)",
        len(data),
        HEADER_SIZE + len(result.payload),
        config.label,
        result.model_bits,
        result.payload_bits,
    )
    return header.pack() + result.payload


def read_header(data: bytes, /) -> CodecHeader:
    return CodecHeader.unpack(data)


def decompress(data: bytes, /) -> bytes:
    """Reconstruct the original bytes from a compressed stream.

    Raises
    ------
    errors.FormatError
        If the header is invalid.
    errors.TruncatedStreamError
        If the stream ends early.
    """
    header = CodecHeader.unpack(data)
    tree = context_tree.ContextTree(header.to_config())
    decoder = coder.ArithmeticDecoder(data[HEADER_SIZE:])
    output = bytearray()
    byte = 0
    for index, bit in enumerate(decode_bits(tree, header.original_length * 8, decoder), start=1):
        byte = (byte << 1) | bit
        if not index & 7:
            output.append(byte)
            byte = 0

    return bytes(output)


def compress_file(source: pathlib.Path, destination: pathlib.Path, config: models.VariantConfig, /) -> int:
    """Compress a file, returning the compressed size in bytes."""
    output = compress(source.read_bytes(), config)
    utilities.atomic_write(destination, output)
    return len(output)


def decompress_file(source: pathlib.Path, destination: pathlib.Path, /) -> int:
    output = decompress(source.read_bytes())
    utilities.atomic_write(destination, output)
    return len(output)


def space_saving(original: int, compressed: int, /) -> float:
    """The benchmark metric 1 - compressed / original; negative when the output grew.

    Raises
    ------
    errors.UndefinedMetricError
        If `original` is 0.
    """
    if original <= 0:
        raise errors.UndefinedMetricError("space saving is undefined for an empty original")

    return 1.0 - compressed / original
