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
import math

import pydantic
import pytest

from src import models


class TestVariantConfig:
    def test_defaults(self):
        config = models.VariantConfig()

        assert config.kind is models.VariantKind.CTW
        assert config.depth == 28
        assert config.params == (0.0, 0.0)

    @pytest.mark.parametrize("field", ["gamma", "c", "alpha"])
    @pytest.mark.parametrize("value", [-0.01, 1.0, 2.0, math.inf, math.nan])
    def test_rates_must_be_in_the_unit_interval(self, field: str, value: float):
        with pytest.raises(pydantic.ValidationError, match=field):
            models.VariantConfig(kind=models.VariantKind.FIXED_RATE, **{field: value})

    @pytest.mark.parametrize("depth", [0, 64])
    def test_depth_bounds(self, depth: int):
        with pytest.raises(pydantic.ValidationError):
            models.VariantConfig(depth=depth)

    def test_unknown_field(self):
        with pytest.raises(pydantic.ValidationError):
            models.VariantConfig(beta=0.5)

    def test_immutable(self):
        config = models.VariantConfig()

        with pytest.raises(TypeError):
            config.depth = 4

    def test_params(self):
        assert models.PRESETS["actw1"].params == (0.01, 0.0)
        assert models.PRESETS["actw4"].params == (0.1, 0.33)

    def test_from_params(self):
        config = models.VariantConfig.from_params(models.VariantKind.LEAF_VISIT, 0.1, 0.33, depth=12)

        assert config == models.PRESETS["actw5"].with_depth(12)

    def test_from_params_ignores_unused_parameters(self):
        config = models.VariantConfig.from_params(models.VariantKind.FIXED_RATE, 0.2, 0.7, depth=3)

        assert config.gamma == 0.2
        assert config.alpha == 0.0

    def test_with_depth_keeps_everything_else(self):
        config = models.PRESETS["actw2"].with_depth(9)

        assert config.depth == 9
        assert (config.kind, config.c, config.alpha) == (models.VariantKind.PARTIAL_VISIT, 0.1, 0.33)

    def test_preset_labels(self):
        for name, preset in models.PRESETS.items():
            assert preset.label == name
            assert preset.with_depth(4).label == name

    def test_custom_labels(self):
        fixed = models.VariantConfig(kind=models.VariantKind.FIXED_RATE, gamma=0.2)
        visit = models.VariantConfig(kind=models.VariantKind.FULL_VISIT, c=0.25, alpha=0.5)

        assert fixed.label == "fixed_rate(gamma=0.2)"
        assert visit.label == "full_visit(c=0.25,alpha=0.5)"

    def test_variant_bytes(self):
        assert [int(kind) for kind in models.VariantKind] == [0, 1, 2, 3, 4, 5]


class TestBenchModels:
    def test_failed_cell(self):
        assert models.BenchCell(variant="ctw", error="boom").failed
        assert not models.BenchCell(variant="ctw", compressed_bytes=10).failed

    def test_report_labels(self):
        report = models.BenchReport(depth=8, variants=[models.PRESETS["actw3"], models.PRESETS["ctw"]])

        assert report.labels == ["actw3", "ctw"]
