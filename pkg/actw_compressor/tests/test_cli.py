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
import csv

import mock
import pytest

from src import analysis
from src import cli
from src import codec
from src import models


@pytest.fixture(autouse=True)
def environment(monkeypatch):
    monkeypatch.setenv("actw_log_level", "warning")
    monkeypatch.setenv("actw_depth", "8")
    monkeypatch.setenv("actw_jobs", "1")


@pytest.fixture()
def source(tmp_path):
    path = tmp_path / "input.txt"
    path.write_bytes(b"all work and no play makes jack a dull boy\n" * 8)
    return path


def _compress(source, destination, *flags: str) -> int:
    return cli.main(["compress", "-i", str(source), "-o", str(destination), *flags])


class TestCompress:
    def test_round_trip(self, source, tmp_path):
        compressed = tmp_path / "input.actw"
        restored = tmp_path / "restored.txt"

        assert _compress(source, compressed, "--preset", "actw1") == cli.EXIT_OK
        assert cli.main(["decompress", "-i", str(compressed), "-o", str(restored)]) == cli.EXIT_OK

        assert restored.read_bytes() == source.read_bytes()
        assert compressed.stat().st_size < source.stat().st_size

    def test_depth_defaults_to_the_environment(self, source, tmp_path):
        compressed = tmp_path / "input.actw"

        assert _compress(source, compressed) == cli.EXIT_OK

        header = codec.read_header(compressed.read_bytes())
        assert header.variant is models.VariantKind.CTW
        assert header.depth == 8

    def test_raw_flags_override_the_preset(self, source, tmp_path):
        compressed = tmp_path / "input.actw"

        code = _compress(source, compressed, "--preset", "actw2", "--alpha", "0.5", "--depth", "5")

        assert code == cli.EXIT_OK
        header = codec.read_header(compressed.read_bytes())
        assert header.to_config() == models.PRESETS["actw3"].with_depth(5)

    def test_variant_flag(self, source, tmp_path):
        compressed = tmp_path / "input.actw"

        code = _compress(source, compressed, "--variant", "fixed-rate", "--gamma", "0.02")

        assert code == cli.EXIT_OK
        header = codec.read_header(compressed.read_bytes())
        assert header.variant is models.VariantKind.FIXED_RATE
        assert header.param1 == 0.02

    def test_rate_out_of_range(self, source, tmp_path, capsys):
        compressed = tmp_path / "input.actw"

        assert _compress(source, compressed, "--preset", "actw1", "--gamma", "1.5") == cli.EXIT_RANGE

        assert not compressed.exists()
        assert "gamma" in capsys.readouterr().err

    def test_depth_out_of_range(self, source, tmp_path):
        assert _compress(source, tmp_path / "out", "--depth", "64") == cli.EXIT_RANGE

    def test_missing_input(self, tmp_path):
        assert _compress(tmp_path / "missing", tmp_path / "out") == cli.EXIT_IO

    def test_unexpected_failure(self, source, tmp_path, capsys):
        with mock.patch.object(codec, "compress_file", side_effect=RuntimeError("boom")):
            assert _compress(source, tmp_path / "out") == cli.EXIT_INTERNAL

        assert "RuntimeError: boom" in capsys.readouterr().err


class TestDecompress:
    def test_bad_magic(self, tmp_path):
        path = tmp_path / "bad.actw"
        path.write_bytes(b"this is not a compressed stream at all")

        assert cli.main(["decompress", "-i", str(path), "-o", str(tmp_path / "out")]) == cli.EXIT_FORMAT
        assert not (tmp_path / "out").exists()

    def test_truncated(self, source, tmp_path):
        compressed = tmp_path / "input.actw"
        _compress(source, compressed)
        compressed.write_bytes(compressed.read_bytes()[:-1])

        assert cli.main(["decompress", "-i", str(compressed), "-o", str(tmp_path / "out")]) == cli.EXIT_TRUNCATED


class TestUsage:
    def test_unknown_flag(self, source, tmp_path):
        assert _compress(source, tmp_path / "out", "--frobnicate") == cli.EXIT_USAGE

    def test_missing_subcommand(self):
        assert cli.main([]) == cli.EXIT_USAGE

    def test_help_lists_the_presets(self, capsys):
        assert cli.main(["--help"]) == cli.EXIT_OK

        output = capsys.readouterr().out
        for name in models.PRESETS:
            assert name in output

    def test_compress_help_lists_the_presets(self, capsys):
        assert cli.main(["compress", "--help"]) == cli.EXIT_OK

        assert "actw5" in capsys.readouterr().out

    def test_bad_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("actw_jobs", "many")

        assert cli.main(["analyze", "--redundancy", "--kmax", "2"]) == cli.EXIT_INTERNAL
        assert "actw_jobs" in capsys.readouterr().err


class TestAnalyze:
    def test_redundancy_curve(self, tmp_path):
        output = tmp_path / "curve.csv"

        assert cli.main(["analyze", "--redundancy", "--theta", "0.3", "--kmax", "64", "-o", str(output)]) == 0

        with output.open() as file:
            rows = list(csv.reader(file))
        assert rows[0] == ["k", "theta", "R"]
        assert len(rows) == 65
        for k, theta, value in rows[1:]:
            assert float(theta) == 0.3
            assert float(value) == analysis.expected_redundancy(int(k), 0.3)

    def test_redundancy_to_stdout(self, capsys):
        assert cli.main(["analyze", "--redundancy", "--theta", "0", "--kmin", "3", "--kmax", "4"]) == cli.EXIT_OK

        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "k,theta,R"
        assert [line.split(",")[0] for line in lines[1:]] == ["3", "4"]

    def test_source(self, tmp_path):
        output = tmp_path / "source.bin"
        argv = ["analyze", "--source", "switching", "--thetas", "0.1,0.9", "--segment", "64"]

        assert cli.main([*argv, "--bits", "1000", "--seed", "3", "-o", str(output)]) == cli.EXIT_OK

        spec = models.SourceSpec(
            kind=models.SourceKind.SWITCHING, thetas=[0.1, 0.9], segment_length=64, total_bits=1000, seed=3
        )
        assert output.read_bytes() == analysis.pack_bits(analysis.generate(spec))

    def test_source_needs_an_output(self):
        assert cli.main(["analyze", "--source", "iid", "--thetas", "0.5"]) == cli.EXIT_RANGE

    def test_source_with_invalid_theta(self, tmp_path):
        output = tmp_path / "source.bin"

        assert cli.main(["analyze", "--source", "iid", "--thetas", "1.5", "-o", str(output)]) == cli.EXIT_RANGE
        assert not output.exists()

    def test_synthetic_corpus(self, tmp_path):
        directory = tmp_path / "corpus"

        assert cli.main(["analyze", "--synthetic-corpus", str(directory), "--segment-bytes", "300"]) == cli.EXIT_OK

        assert sorted(path.name for path in directory.iterdir()) == sorted(
            (*analysis.SEGMENT_NAMES, analysis.MANIFEST_NAME)
        )


class TestBench:
    def test_markdown_report(self, tmp_path, capsys):
        analysis.write_synthetic_corpus(tmp_path, segment_bytes=64)
        argv = ["bench", "--corpus", str(tmp_path), "--manifest", str(tmp_path / analysis.MANIFEST_NAME)]

        code = cli.main([*argv, "--files", *analysis.SEGMENT_NAMES, "--preset", "ctw", "--format", "markdown"])

        assert code == cli.EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert [cell.strip() for cell in lines[0].split("|")[1:-1]] == ["file", "original_bytes", "ctw"]
        assert [line.split("|")[1].strip() for line in lines[2:]] == [*analysis.SEGMENT_NAMES, "merge (merged)"]

    def test_csv_report_without_timings(self, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        (corpus / "a.bin").write_bytes(bytes(100))
        output = tmp_path / "report.csv"

        argv = ["bench", "--corpus", str(corpus), "--preset", "ctw", "--preset", "actw1", "--depth", "4"]
        assert cli.main([*argv, "--no-timings", "-o", str(output)]) == cli.EXIT_OK

        rows = output.read_text().splitlines()
        assert rows[0] == "file,variant,original_bytes,compressed_bytes,space_saving_pct"
        assert [row.split(",")[:3] for row in rows[1:]] == [["a.bin", "ctw", "100"], ["a.bin", "actw1", "100"]]

    def test_invalid_jobs(self, tmp_path):
        assert cli.main(["bench", "--corpus", str(tmp_path), "--jobs", "0"]) == cli.EXIT_RANGE
