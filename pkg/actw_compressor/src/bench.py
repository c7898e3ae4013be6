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
"""Corpus benchmark harness reporting per-variant space savings."""
from __future__ import annotations

__all__: list[str] = ["CSV_COLUMNS", "FormatT", "MERGE_SUFFIX", "parse_manifest", "render", "run_suite"]

import concurrent.futures
import csv
import io
import logging
import time
import typing

from . import codec
from . import models

if typing.TYPE_CHECKING:
    import collections.abc as collections
    import pathlib

FormatT = typing.Literal["csv", "markdown"]
CSV_COLUMNS: typing.Final[tuple[str, ...]] = (
    "file",
    "variant",
    "original_bytes",
    "compressed_bytes",
    "space_saving_pct",
    "seconds",
)
MERGE_SUFFIX: typing.Final[str] = " (merged)"
"""Appended to the names of merge set rows in rendered reports."""

_LOGGER = logging.getLogger("actw.bench")


def parse_manifest(text: str, /) -> dict[str, list[str]]:
    """Parse a merge manifest into ordered merge sets.

    Each set starts with a `[name]` header followed by one file path per line; blank lines
    and lines starting with `#` are ignored.

    Raises
    ------
    ValueError
        If a path appears before any set header or a set name is repeated.
    """
    sets: dict[str, list[str]] = {}
    current: typing.Optional[list[str]] = None
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue

        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if not name or name in sets:
                raise ValueError(f"line {number}: missing or duplicate merge set name {name!r}")

            current = sets[name] = []

        elif current is None:
            raise ValueError(f"line {number}: file listed before any [merge set] header")

        else:
            current.append(line)

    return sets


class _Job(typing.NamedTuple):
    row: int
    column: int
    name: str
    paths: tuple[pathlib.Path, ...]
    variant: models.VariantConfig


def _run_cell(job: _Job, /) -> tuple[typing.Optional[int], models.BenchCell]:
    label = job.variant.label
    try:
        data = b"".join(path.read_bytes() for path in job.paths)

    except OSError as exc:
        return None, models.BenchCell(variant=label, error=f"{type(exc).__name__}: {exc}")

    start = time.perf_counter()
    try:
        compressed = codec.compress(data, job.variant)
        if codec.decompress(compressed) != data:
            return len(data), models.BenchCell(variant=label, error="round trip mismatch")

    except Exception as exc:
        return len(data), models.BenchCell(variant=label, error=f"{type(exc).__name__}: {exc}")

    seconds = time.perf_counter() - start
    saving = codec.space_saving(len(data), len(compressed)) * 100.0 if data else None
    cell = models.BenchCell(
        variant=label, compressed_bytes=len(compressed), space_saving_pct=saving, seconds=seconds
    )
    return len(data), cell


def run_suite(
    corpus_dir: pathlib.Path,
    merge_manifest: collections.Mapping[str, collections.Sequence[str]],
    variants: collections.Sequence[models.VariantConfig],
    /,
    *,
    files: typing.Optional[collections.Sequence[str]] = None,
    jobs: int = 1,
) -> models.BenchReport:
    """Compress every corpus file and every ordered merge set with every variant.

    Each compression is verified by decompressing it before its size is reported. A file
    which can't be read marks its cells as failed rather than stopping the suite.

    Parameters
    ----------
    corpus_dir
        Directory the file names and manifest paths are relative to.
    merge_manifest
        Ordered mapping of merge set names to the files concatenated (with no separator)
        to build them.
    variants
        Variants to run; each becomes a report column.
    files
        Individual files to run, defaults to every regular file directly inside `corpus_dir`.
    jobs
        Worker processes to run cells on, 1 runs everything in this process.
    """
    if files is None:
        files = sorted(path.name for path in corpus_dir.iterdir() if path.is_file())

    entries: list[tuple[str, tuple[pathlib.Path, ...], bool]] = [
        (name, (corpus_dir / name,), False) for name in files
    ]
    entries.extend(
        (name, tuple(corpus_dir / path for path in paths), True) for name, paths in merge_manifest.items()
    )
    work = [
        _Job(row, column, name, paths, variant)
        for row, (name, paths, _) in enumerate(entries)
        for column, variant in enumerate(variants)
    ]

    if jobs > 1 and len(work) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(_run_cell, work))

    else:
        results = [_run_cell(job) for job in work]

    sizes: list[typing.Optional[int]] = [None] * len(entries)
    cells: list[list[typing.Optional[models.BenchCell]]] = [[None] * len(variants) for _ in entries]
    for job, (size, cell) in zip(work, results):
        if size is not None:
            sizes[job.row] = size

        cells[job.row][job.column] = cell
        if cell.failed:
            _LOGGER.warning("%s with %s failed: %s", job.name, cell.variant, cell.error)

        else:
            _LOGGER.info("%s with %s: %s bytes in %.2fs", job.name, cell.variant, cell.compressed_bytes, cell.seconds)

    rows = [
        models.BenchRow(
            name=name,
            original_bytes=sizes[index],
            is_merge=is_merge,
            cells=[cell for cell in cells[index] if cell is not None],
        )
        for index, (name, _, is_merge) in enumerate(entries)
    ]
    depth = variants[0].depth if variants else 0
    return models.BenchReport(depth=depth, variants=list(variants), rows=rows)


def _format_pct(value: typing.Optional[float], /) -> str:
    return "" if value is None else f"{value:.2f}"


def _display_name(row: models.BenchRow, /) -> str:
    return row.name + MERGE_SUFFIX if row.is_merge else row.name


def _render_csv(report: models.BenchReport, /, *, timings: bool) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS if timings else CSV_COLUMNS[:-1])
    for row in report.rows:
        name = _display_name(row)
        original = "" if row.original_bytes is None else str(row.original_bytes)
        for cell in row.cells:
            if cell.failed:
                record = [name, cell.variant, original, "", "failed"]

            else:
                compressed = str(cell.compressed_bytes)
                record = [name, cell.variant, original, compressed, _format_pct(cell.space_saving_pct)]

            if timings:
                record.append(f"{cell.seconds:.3f}")

            writer.writerow(record)

    return buffer.getvalue()


def _render_markdown(report: models.BenchReport, /) -> str:
    header = ["file", "original_bytes", *report.labels]
    table = [header]
    for row in report.rows:
        # Cells line up with the report's variants by position, labels may repeat.
        values = ["failed" if cell.failed else _format_pct(cell.space_saving_pct) for cell in row.cells]
        values.extend("" for _ in range(len(report.variants) - len(values)))
        original = "" if row.original_bytes is None else str(row.original_bytes)
        table.append([_display_name(row), original, *values[: len(report.variants)]])

    widths = [max(len(line[column]) for line in table) for column in range(len(header))]
    lines = ["| " + " | ".join(value.ljust(width) for value, width in zip(header, widths)) + " |"]
    separators = ["-" * (widths[0] + 2), *("-" * (width + 1) + ":" for width in widths[1:])]
    lines.append("|" + "|".join(separators) + "|")
    for line in table[1:]:
        cells = [line[0].ljust(widths[0]), *(value.rjust(width) for value, width in zip(line[1:], widths[1:]))]
        lines.append("| " + " | ".join(cells) + " |")

    return "\n".join(lines) + "\n"


def render(report: models.BenchReport, format: FormatT = "csv", /, *, timings: bool = True) -> str:
    """Render a report; space savings are percentages to 2 decimal places.

    `timings` only applies to CSV output, turning it off makes the output byte deterministic.
    """
    if format == "csv":
        return _render_csv(report, timings=timings)

    if format == "markdown":
        return _render_markdown(report)

    raise ValueError(f"unknown report format {format!r}")
