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
"""Analytical tooling and synthetic sources for adaptation experiments."""
from __future__ import annotations

__all__: list[str] = [
    "MANIFEST_NAME",
    "SEGMENT_NAMES",
    "binary_entropy",
    "expected_redundancy",
    "generate",
    "pack_bits",
    "random_bytes",
    "redundancy_curve",
    "repetitive_bytes",
    "text_like_bytes",
    "write_synthetic_corpus",
]

import math
import typing

import numpy
from scipy import special

from . import errors
from . import models
from . import utilities

if typing.TYPE_CHECKING:
    import pathlib

    import numpy.typing as npt

MANIFEST_NAME: typing.Final[str] = "merge.txt"
SEGMENT_NAMES: typing.Final[tuple[str, str, str]] = ("text.txt", "random.bin", "repetitive.txt")

_WORDS: typing.Final[tuple[str, ...]] = (
    "the", "cat", "sat", "on", "a", "mat", "and", "dog", "ran", "to", "see", "its", "old", "red", "ball", "in",
    "garden", "while", "birds", "sang",
)  # fmt: skip
_REPEATED_PHRASE: typing.Final[bytes] = b"garden birds sang old ball red its see dog to ran mat on cat sat the. "


def binary_entropy(theta: float, /) -> float:
    """Entropy of a Bernoulli(theta) source in bits."""
    if not 0.0 <= theta <= 1.0:
        raise errors.ParameterError(f"theta must be between 0 and 1, not {theta!r}")

    return float(special.entr(theta) + special.entr(1.0 - theta)) / math.log(2.0)


def expected_redundancy(k: int, theta: float, /) -> float:
    """Expected one-bit redundancy, in bits, of a KT estimator that only sees the last `k` bits.

    With a window holding `a` ones (probability C(k, a) theta^a (1 - theta)^(k - a)), the next bit
    costs log2((k + 1) / (a + 1/2)) if it is a 1 and log2((k + 1) / (k - a + 1/2)) if it is a 0;
    the result is that expectation minus the source entropy.

    Raises
    ------
    errors.ParameterError
        If `k` < 1 or `theta` is outside of [0, 1].
    """
    if k < 1:
        raise errors.ParameterError(f"window length must be at least 1, not {k}")

    if not 0.0 <= theta <= 1.0:
        raise errors.ParameterError(f"theta must be between 0 and 1, not {theta!r}")

    ones = numpy.arange(k + 1, dtype=numpy.float64)
    zeros = k - ones
    log_weights = (
        special.gammaln(k + 1.0)
        - special.gammaln(ones + 1.0)
        - special.gammaln(zeros + 1.0)
        + special.xlogy(ones, theta)
        + special.xlogy(zeros, 1.0 - theta)
    )
    costs = theta * numpy.log2((k + 1.0) / (ones + 0.5)) + (1.0 - theta) * numpy.log2((k + 1.0) / (zeros + 0.5))
    return float(numpy.sum(numpy.exp(log_weights) * costs)) - binary_entropy(theta)


def redundancy_curve(theta: float, k_max: int, /, k_min: int = 1) -> list[tuple[int, float, float]]:
    """Rows of (k, theta, R(k; theta)) for every window length from `k_min` to `k_max`."""
    if k_min < 1 or k_max < k_min:
        raise errors.ParameterError(f"invalid window range {k_min}..{k_max}")

    return [(k, theta, expected_redundancy(k, theta)) for k in range(k_min, k_max + 1)]


def _thetas_for(spec: models.SourceSpec, /) -> npt.NDArray[numpy.float64]:
    thetas = numpy.asarray(spec.thetas, dtype=numpy.float64)
    positions = numpy.arange(spec.total_bits)
    if spec.kind is models.SourceKind.IID:
        return numpy.full(spec.total_bits, thetas[0])

    if spec.kind is models.SourceKind.SWITCHING:
        return thetas[(positions // spec.segment_length) % len(thetas)]

    if len(thetas) == 1:
        return numpy.full(spec.total_bits, thetas[0])

    span = max(spec.total_bits - 1, 1)
    fraction = (positions / span * spec.drift_rate) % 1.0
    if spec.drift_rate == 1.0 and spec.total_bits > 1:
        # A single sweep should land exactly on the final theta.
        fraction[-1] = 1.0

    anchors = numpy.linspace(0.0, 1.0, len(thetas))
    return numpy.interp(fraction, anchors, thetas)


def generate(spec: models.SourceSpec, /) -> npt.NDArray[numpy.uint8]:
    """Draw `spec.total_bits` bits from the described source; deterministic in `spec.seed`."""
    rng = numpy.random.default_rng(spec.seed)
    return (rng.random(spec.total_bits) < _thetas_for(spec)).astype(numpy.uint8)


def pack_bits(bits: npt.ArrayLike, /) -> bytes:
    """Pack bits MSB-first into bytes, zero padding the final byte."""
    return numpy.packbits(numpy.asarray(bits, dtype=numpy.uint8), bitorder="big").tobytes()


def text_like_bytes(length: int, /, *, seed: int = 0) -> bytes:
    """English-looking text from a first-order word Markov chain."""
    rng = numpy.random.default_rng(seed)
    vocabulary = len(_WORDS)
    # Each word is followed by one of a handful of favoured successors.
    transitions = rng.dirichlet(numpy.full(vocabulary, 0.1), size=vocabulary)
    output = bytearray()
    word = int(rng.integers(vocabulary))
    while len(output) < length:
        output += _WORDS[word].encode()
        output += b". " if rng.random() < 0.08 else b" "
        word = int(rng.choice(vocabulary, p=transitions[word]))

    return bytes(output[:length])


def random_bytes(length: int, /, *, seed: int = 0) -> bytes:
    return numpy.random.default_rng(seed).bytes(length)


def repetitive_bytes(length: int, /) -> bytes:
    """A single phrase repeated to `length` bytes."""
    repeats = length // len(_REPEATED_PHRASE) + 1
    return (_REPEATED_PHRASE * repeats)[:length]


def write_synthetic_corpus(directory: pathlib.Path, /, *, segment_bytes: int, seed: int = 0) -> list[pathlib.Path]:
    """Write three heterogeneous segments and a manifest which concatenates them in order."""
    directory.mkdir(parents=True, exist_ok=True)
    segments = (
        text_like_bytes(segment_bytes, seed=seed),
        random_bytes(segment_bytes, seed=seed),
        repetitive_bytes(segment_bytes),
    )
    paths: list[pathlib.Path] = []
    for name, data in zip(SEGMENT_NAMES, segments):
        path = directory / name
        utilities.atomic_write(path, data)
        paths.append(path)

    manifest = "[merge]\n" + "".join(f"{name}\n" for name in SEGMENT_NAMES)
    utilities.atomic_write(directory / MANIFEST_NAME, manifest.encode())
    return paths
