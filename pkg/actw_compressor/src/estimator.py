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
"""The Krichevsky-Trofimov estimator and its discounted generalization.

All functions here are pure: they take a `CountPair` and return a new one.
"""
from __future__ import annotations

__all__: list[str] = [
    "CountPair",
    "EMPTY_COUNTS",
    "clamp_probability",
    "discount_weights",
    "effective_horizon",
    "kt_block_logprob",
    "kt_predict",
    "kt_update",
    "kt_update_additive",
]

import math
import typing

from . import errors
from . import validation

if typing.TYPE_CHECKING:
    import collections.abc as collections


class CountPair(typing.NamedTuple):
    """Discounted symbol counts and accumulated block probability at a tree node."""

    a: float = 0.0
    """Discounted count of zeros."""
    b: float = 0.0
    """Discounted count of ones."""
    log_kt: float = 0.0
    """Natural log of the product of every predictive probability handed out so far."""


EMPTY_COUNTS: typing.Final[CountPair] = CountPair()


def _check_gamma(gamma: float, /) -> None:
    if not 0.0 <= gamma < 1.0:
        raise errors.ParameterError(f"discount rate must be in [0, 1), not {gamma!r}")


def kt_predict(counts: CountPair, symbol: int, /) -> float:
    """Probability of `symbol` given the node's counts, (count + 1/2) / (a + b + 1)."""
    if symbol:
        return (counts.b + 0.5) / (counts.a + counts.b + 1.0)

    return (counts.a + 0.5) / (counts.a + counts.b + 1.0)


def kt_update(counts: CountPair, symbol: int, gamma: float, /) -> CountPair:
    """Observe `symbol`: predict, increment the matching count, then discount both counts.

    Raises
    ------
    errors.ParameterError
        If `gamma` is outside of [0, 1).
    """
    _check_gamma(gamma)
    a, b, log_kt = counts
    total = a + b + 1.0
    if symbol:
        log_kt += math.log((b + 0.5) / total)
        b += 1.0

    else:
        log_kt += math.log((a + 0.5) / total)
        a += 1.0

    keep = 1.0 - gamma
    return CountPair(a * keep, b * keep, log_kt)


def kt_update_additive(counts: CountPair, symbol: int, a: float, b: float, /) -> CountPair:
    """Observe `symbol` then replace the counts outright with `a` and `b`.

    Internal nodes of a leaf-context visit tree use this with the sums of their children's counts.
    """
    return CountPair(a, b, counts.log_kt + math.log(kt_predict(counts, symbol)))


def kt_block_logprob(bits: collections.Iterable[int], gamma: float = 0.0, /) -> float:
    """Log probability the (discounted) KT estimator assigns to a whole bit sequence."""
    _check_gamma(gamma)
    counts = EMPTY_COUNTS
    for bit in bits:
        counts = kt_update(counts, bit, gamma)

    return counts.log_kt


def clamp_probability(probability: float, /) -> float:
    """Clamp a probability to the range the arithmetic coder accepts."""
    return min(max(probability, validation.MINIMUM_PROBABILITY), validation.MAXIMUM_PROBABILITY)


def discount_weights(gamma: float, k: int, /) -> list[float]:
    """Weight the stored counts give to each of the last `k` observations, oldest first.

    After `k` updates the i-th observation contributes (1 - gamma)^(k - i + 1).
    """
    _check_gamma(gamma)
    if k < 0:
        raise errors.ParameterError(f"observation count must be non-negative, not {k}")

    keep = 1.0 - gamma
    return [keep ** (k - i + 1) for i in range(1, k + 1)]


def effective_horizon(gamma: float, /) -> float:
    _check_gamma(gamma)
    return math.inf if gamma == 0.0 else 1.0 / gamma
