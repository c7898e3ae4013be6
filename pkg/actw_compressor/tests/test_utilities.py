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
import logging
import os

import mock
import pytest

from src import utilities


class TestMetadata:
    def test_defaults(self):
        metadata = utilities.Metadata({})

        assert metadata.default_depth == 28
        assert metadata.jobs == (os.cpu_count() or 1)
        assert metadata.log_level == "info"

    def test_values(self):
        metadata = utilities.Metadata({"actw_depth": "12", "actw_jobs": "3", "actw_log_level": "DEBUG"})

        assert metadata.default_depth == 12
        assert metadata.jobs == 3
        assert metadata.log_level == "debug"
        assert metadata() is metadata

    def test_blank_values_use_defaults(self):
        assert utilities.Metadata({"actw_depth": "  "}).default_depth == 28

    @pytest.mark.parametrize(
        "environ",
        [
            {"actw_depth": "deep"},
            {"actw_depth": "0"},
            {"actw_depth": "64"},
            {"actw_jobs": "0"},
            {"actw_log_level": "loud"},
        ],
    )
    def test_invalid_values(self, environ: dict[str, str]):
        with pytest.raises(RuntimeError):
            utilities.Metadata(environ)

    def test_reads_the_process_environment(self, monkeypatch):
        monkeypatch.setenv("actw_depth", "7")

        with mock.patch.object(utilities.dotenv, "load_dotenv") as load_dotenv:
            metadata = utilities.Metadata()

        load_dotenv.assert_called_once_with()
        assert metadata.default_depth == 7


class TestAtomicWrite:
    def test_writes(self, tmp_path):
        path = tmp_path / "out.bin"

        utilities.atomic_write(path, b"payload")

        assert path.read_bytes() == b"payload"
        assert list(tmp_path.iterdir()) == [path]

    def test_replaces(self, tmp_path):
        path = tmp_path / "out.bin"
        path.write_bytes(b"old")

        utilities.atomic_write(path, b"new")

        assert path.read_bytes() == b"new"

    def test_failure_leaves_nothing_behind(self, tmp_path):
        path = tmp_path / "out.bin"

        with mock.patch.object(os, "replace", side_effect=OSError("disk full")), pytest.raises(OSError):
            utilities.atomic_write(path, b"payload")

        assert list(tmp_path.iterdir()) == []


def test_configure_logging():
    with mock.patch.object(logging, "basicConfig") as basic_config:
        utilities.configure_logging("warning")

    basic_config.assert_called_once_with(level="WARNING", format=utilities.LOG_FORMAT)
