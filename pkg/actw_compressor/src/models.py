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
from __future__ import annotations

__all__: list[str] = [
    "BenchCell",
    "BenchReport",
    "BenchRow",
    "ModelConfig",
    "PRESETS",
    "SourceKind",
    "SourceSpec",
    "VariantConfig",
    "VariantKind",
]

import enum
import inspect
import typing

import pydantic

from . import validation


class VariantKind(enum.IntEnum):
    """Discount-rate schedule used by a context tree.

    The values double as the variant byte of the container header.
    """

    CTW = 0
    """Standard context tree weighting (no discounting)."""
    FIXED_RATE = 1
    """Constant discount rate gamma at every node."""
    SEQ_LENGTH = 2
    """Rate c * t^-alpha where t is the number of bits processed so far."""
    PARTIAL_VISIT = 3
    """Rate c * k^-alpha where k is the number of visits to the node being updated."""
    FULL_VISIT = 4
    """Rate c * k_n^-alpha with k_n the visits to the current leaf, shared by the whole path."""
    LEAF_VISIT = 5
    """Leaf discounted by c * k_n^-alpha; internal counts are the sums of their children."""


class SourceKind(str, enum.Enum):
    IID = "iid"
    SWITCHING = "switching"
    DRIFTING = "drifting"


class ModelConfig(pydantic.BaseConfig):
    """Frozen, extra-forbidding config shared by every model in the package."""

    allow_mutation = False
    extra = pydantic.Extra.forbid


class VariantConfig(pydantic.BaseModel):
    """Which discount schedule a context tree uses and with what parameters."""

    kind: VariantKind = VariantKind.CTW
    gamma: float = 0.0
    c: float = 0.0
    alpha: float = 0.0
    depth: int = pydantic.Field(
        default=validation.DEFAULT_DEPTH, ge=validation.MINIMUM_DEPTH, le=validation.MAXIMUM_DEPTH
    )

    Config = ModelConfig

    @pydantic.validator("gamma", "c", "alpha")
    def validate_rate(cls, value: float, field: pydantic.fields.ModelField) -> float:
        return validation.validate_unit_interval(value, name=field.name)

    @property
    def label(self) -> str:
        """Preset name if these parameters match one, otherwise a descriptive string."""
        for name, preset in PRESETS.items():
            if preset.kind is self.kind and preset.params == self.params:
                return name

        if self.kind is VariantKind.FIXED_RATE:
            return f"fixed_rate(gamma={self.gamma:g})"

        return f"{self.kind.name.lower()}(c={self.c:g},alpha={self.alpha:g})"

    @property
    def params(self) -> tuple[float, float]:
        """The two parameters stored in the container header for this variant."""
        if self.kind is VariantKind.CTW:
            return (0.0, 0.0)

        if self.kind is VariantKind.FIXED_RATE:
            return (self.gamma, 0.0)

        return (self.c, self.alpha)

    @classmethod
    def from_params(cls, kind: VariantKind, param1: float, param2: float, /, *, depth: int) -> VariantConfig:
        if kind is VariantKind.CTW:
            return cls(kind=kind, depth=depth)

        if kind is VariantKind.FIXED_RATE:
            return cls(kind=kind, gamma=param1, depth=depth)

        return cls(kind=kind, c=param1, alpha=param2, depth=depth)

    def with_depth(self, depth: int, /) -> VariantConfig:
        return VariantConfig(kind=self.kind, gamma=self.gamma, c=self.c, alpha=self.alpha, depth=depth)


PRESETS: typing.Final[dict[str, VariantConfig]] = {
    "ctw": VariantConfig(kind=VariantKind.CTW),
    "actw1": VariantConfig(kind=VariantKind.FIXED_RATE, gamma=0.01),
    "actw2": VariantConfig(kind=VariantKind.PARTIAL_VISIT, c=0.1, alpha=0.33),
    "actw3": VariantConfig(kind=VariantKind.PARTIAL_VISIT, c=0.1, alpha=0.5),
    "actw4": VariantConfig(kind=VariantKind.FULL_VISIT, c=0.1, alpha=0.33),
    "actw5": VariantConfig(kind=VariantKind.LEAF_VISIT, c=0.1, alpha=0.33),
}
"""Named variants, the adaptive ones matching the parameterizations compared in the benchmark tables."""


class SourceSpec(pydantic.BaseModel):
    """Description of a synthetic (possibly non-stationary) Bernoulli source."""

    kind: SourceKind = SourceKind.IID
    thetas: list[float] = pydantic.Field(..., min_items=1)
    segment_length: int = pydantic.Field(default=1, ge=1)
    drift_rate: float = pydantic.Field(default=1.0, gt=0.0)
    """How many times a drifting source sweeps through `thetas` over `total_bits`."""
    seed: int = pydantic.Field(default=0, ge=0, lt=1 << 64)
    total_bits: int = pydantic.Field(..., ge=1)

    Config = ModelConfig

    @pydantic.validator("thetas", each_item=True)
    def validate_theta(cls, theta: float) -> float:
        return validation.validate_probability(theta)


class BenchCell(pydantic.BaseModel):
    """The outcome of compressing one file (or merge set) with one variant."""

    variant: str
    compressed_bytes: typing.Optional[int] = None
    space_saving_pct: typing.Optional[float] = None
    seconds: float = 0.0
    error: typing.Optional[str] = None

    Config = ModelConfig

    @property
    def failed(self) -> bool:
        return self.error is not None


class BenchRow(pydantic.BaseModel):
    name: str
    original_bytes: typing.Optional[int] = None
    is_merge: bool = False
    cells: list[BenchCell] = pydantic.Field(default_factory=list)

    Config = ModelConfig


class BenchReport(pydantic.BaseModel):
    depth: int
    variants: list[VariantConfig] = pydantic.Field(default_factory=list)
    rows: list[BenchRow] = pydantic.Field(default_factory=list)

    Config = ModelConfig

    @property
    def labels(self) -> list[str]:
        return [variant.label for variant in self.variants]


if not typing.TYPE_CHECKING:
    for entry in globals().copy().values():
        if inspect.isclass(entry) and issubclass(entry, pydantic.BaseModel):
            entry.update_forward_refs()

    del entry
