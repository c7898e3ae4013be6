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
"""Command line front end: compress, decompress, bench and analyze."""
from __future__ import annotations

__all__: list[str] = [
    "EXIT_FORMAT",
    "EXIT_INTERNAL",
    "EXIT_IO",
    "EXIT_OK",
    "EXIT_RANGE",
    "EXIT_TRUNCATED",
    "EXIT_USAGE",
    "build_parser",
    "main",
]

import argparse
import csv
import io
import logging
import pathlib
import sys
import typing

import pydantic

from . import analysis
from . import bench
from . import codec
from . import errors
from . import models
from . import utilities

if typing.TYPE_CHECKING:
    import collections.abc as collections

EXIT_OK: typing.Final[int] = 0
EXIT_INTERNAL: typing.Final[int] = 1
EXIT_USAGE: typing.Final[int] = 2
EXIT_RANGE: typing.Final[int] = 3
EXIT_IO: typing.Final[int] = 4
EXIT_FORMAT: typing.Final[int] = 5
EXIT_TRUNCATED: typing.Final[int] = 6

_LOGGER = logging.getLogger("actw.cli")

_PRESET_DESCRIPTIONS: typing.Final[dict[str, str]] = {
    "ctw": "standard context tree weighting",
    "actw1": "fixed rate, gamma = 0.01",
    "actw2": "partial context visit based, c = 0.1, alpha = 0.33",
    "actw3": "partial context visit based, c = 0.1, alpha = 0.5",
    "actw4": "full context visit based, c = 0.1, alpha = 0.33",
    "actw5": "leaf context visit based, c = 0.1, alpha = 0.33",
}
_VARIANT_NAMES: typing.Final[dict[str, models.VariantKind]] = {
    "ctw": models.VariantKind.CTW,
    "fixed-rate": models.VariantKind.FIXED_RATE,
    "seq-length": models.VariantKind.SEQ_LENGTH,
    "partial-visit": models.VariantKind.PARTIAL_VISIT,
    "full-visit": models.VariantKind.FULL_VISIT,
    "leaf-visit": models.VariantKind.LEAF_VISIT,
}


def _presets_epilog() -> str:
    width = max(map(len, models.PRESETS))
    lines = ["presets (context depth defaults to 28):"]
    lines.extend(f"  {name.ljust(width)}  {_PRESET_DESCRIPTIONS[name]}" for name in models.PRESETS)
    return "\n".join(lines)


def _float_list(value: str, /) -> list[float]:
    try:
        return [float(item) for item in value.split(",") if item.strip()]

    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of numbers, not {value!r}") from None


def _add_variant_arguments(parser: argparse.ArgumentParser, /, *, many: bool = False) -> None:
    group = parser.add_argument_group("variant")
    if many:
        group.add_argument(
            "--preset",
            action="append",
            choices=list(models.PRESETS),
            help="preset to run, may be repeated (defaults to every preset)",
        )

    else:
        group.add_argument("--preset", choices=list(models.PRESETS), default="ctw", help="named variant (default: ctw)")
        group.add_argument("--variant", choices=list(_VARIANT_NAMES), help="discount schedule, overrides the preset's")
        group.add_argument("--gamma", type=float, help="fixed discount rate in [0, 1)")
        group.add_argument("--c", type=float, help="schedule scale in [0, 1)")
        group.add_argument("--alpha", type=float, help="schedule exponent in [0, 1)")

    group.add_argument("--depth", type=int, help="context tree depth (default: actw_depth or 28)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="actw",
        description="Context tree weighting compressor with adaptive (discounted) KT estimators.",
        epilog=_presets_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(
        dest="subcommand", required=True, metavar="{compress,decompress,bench,analyze}"
    )

    compress = subparsers.add_parser(
        "compress",
        help="compress a file",
        epilog=_presets_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    compress.add_argument("-i", "--input", type=pathlib.Path, required=True)
    compress.add_argument("-o", "--output", type=pathlib.Path, required=True)
    _add_variant_arguments(compress)

    decompress = subparsers.add_parser("decompress", help="decompress a file")
    decompress.add_argument("-i", "--input", type=pathlib.Path, required=True)
    decompress.add_argument("-o", "--output", type=pathlib.Path, required=True)

    bench_ = subparsers.add_parser(
        "bench",
        help="benchmark variants over a corpus",
        epilog=_presets_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    bench_.add_argument("--corpus", type=pathlib.Path, required=True, help="directory holding the corpus files")
    bench_.add_argument("--manifest", type=pathlib.Path, help="merge set manifest, paths relative to --corpus")
    bench_.add_argument("--files", nargs="*", help="files to run individually (default: every file in --corpus)")
    bench_.add_argument("--format", choices=typing.get_args(bench.FormatT), default="csv")
    bench_.add_argument("--jobs", type=int, help="worker processes (default: actw_jobs or the processor count)")
    bench_.add_argument("--timings", action=argparse.BooleanOptionalAction, default=True, help="include seconds")
    bench_.add_argument("-o", "--output", type=pathlib.Path, help="write the report here instead of stdout")
    _add_variant_arguments(bench_, many=True)

    analyze = subparsers.add_parser("analyze", help="redundancy curves and synthetic sources")
    mode = analyze.add_mutually_exclusive_group(required=True)
    mode.add_argument("--redundancy", action="store_true", help="write R(k; theta) as CSV")
    mode.add_argument("--source", choices=[kind.value for kind in models.SourceKind], help="generate a bit source")
    mode.add_argument("--synthetic-corpus", type=pathlib.Path, metavar="DIR", help="write a merge test corpus")
    analyze.add_argument("--theta", type=float, default=0.5)
    analyze.add_argument("--kmin", type=int, default=1)
    analyze.add_argument("--kmax", type=int, default=1024)
    analyze.add_argument("--thetas", type=_float_list, default=[0.5], help="comma separated source probabilities")
    analyze.add_argument("--segment", type=int, default=2048, help="bits per switching segment")
    analyze.add_argument("--drift-rate", type=float, default=1.0)
    analyze.add_argument("--bits", type=int, default=1 << 17, help="number of source bits to generate")
    analyze.add_argument("--segment-bytes", type=int, default=1 << 14, help="size of each synthetic corpus file")
    analyze.add_argument("--seed", type=int, default=0)
    analyze.add_argument("-o", "--output", type=pathlib.Path)
    return parser


def _resolve_variant(args: argparse.Namespace, metadata: utilities.Metadata, /) -> models.VariantConfig:
    preset = models.PRESETS[args.preset]
    kind = _VARIANT_NAMES[args.variant] if args.variant else preset.kind
    return models.VariantConfig(
        kind=kind,
        gamma=preset.gamma if args.gamma is None else args.gamma,
        c=preset.c if args.c is None else args.c,
        alpha=preset.alpha if args.alpha is None else args.alpha,
        depth=metadata.default_depth if args.depth is None else args.depth,
    )


def _write_output(path: typing.Optional[pathlib.Path], text: str, /) -> None:
    if path is None:
        sys.stdout.write(text)

    else:
        utilities.atomic_write(path, text.encode())


def _compress(args: argparse.Namespace, metadata: utilities.Metadata, /) -> int:
    config = _resolve_variant(args, metadata)
    size = codec.compress_file(args.input, args.output, config)
    _LOGGER.info("wrote %s bytes to %s using %s", size, args.output, config.label)
    return EXIT_OK


def _decompress(args: argparse.Namespace, _: utilities.Metadata, /) -> int:
    size = codec.decompress_file(args.input, args.output)
    _LOGGER.info("wrote %s bytes to %s", size, args.output)
    return EXIT_OK


def _bench(args: argparse.Namespace, metadata: utilities.Metadata, /) -> int:
    depth = metadata.default_depth if args.depth is None else args.depth
    variants = [models.PRESETS[name].with_depth(depth) for name in args.preset or models.PRESETS]
    jobs = metadata.jobs if args.jobs is None else args.jobs
    if jobs < 1:
        raise errors.ParameterError(f"--jobs must be at least 1, not {jobs}")

    manifest = bench.parse_manifest(args.manifest.read_text()) if args.manifest else {}
    report = bench.run_suite(args.corpus, manifest, variants, files=args.files, jobs=jobs)
    _write_output(args.output, bench.render(report, args.format, timings=args.timings))
    return EXIT_OK


def _analyze(args: argparse.Namespace, _: utilities.Metadata, /) -> int:
    if args.redundancy:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("k", "theta", "R"))
        writer.writerows(analysis.redundancy_curve(args.theta, args.kmax, k_min=args.kmin))
        _write_output(args.output, buffer.getvalue())

    elif args.source:
        if args.output is None:
            raise errors.ParameterError("--source requires -o/--output")

        spec = models.SourceSpec(
            kind=models.SourceKind(args.source),
            thetas=args.thetas,
            segment_length=args.segment,
            drift_rate=args.drift_rate,
            seed=args.seed,
            total_bits=args.bits,
        )
        utilities.atomic_write(args.output, analysis.pack_bits(analysis.generate(spec)))

    else:
        if args.segment_bytes < 1:
            raise errors.ParameterError(f"--segment-bytes must be at least 1, not {args.segment_bytes}")

        analysis.write_synthetic_corpus(args.synthetic_corpus, segment_bytes=args.segment_bytes, seed=args.seed)

    return EXIT_OK


_HANDLERS: typing.Final[dict[str, collections.Callable[[argparse.Namespace, utilities.Metadata], int]]] = {
    "compress": _compress,
    "decompress": _decompress,
    "bench": _bench,
    "analyze": _analyze,
}


def _fail(code: int, message: str, /) -> int:
    print(f"actw: error: {message}", file=sys.stderr)
    return code


def main(argv: typing.Optional[collections.Sequence[str]] = None, /) -> int:
    """Run the command line interface, returning the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)

    except SystemExit as exc:
        # argparse has already printed its diagnostic (or the help text).
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        metadata = utilities.Metadata()

    except RuntimeError as exc:
        return _fail(EXIT_INTERNAL, str(exc))

    utilities.configure_logging(metadata.log_level)

    try:
        return _HANDLERS[args.subcommand](args, metadata)

    except pydantic.ValidationError as exc:
        return _fail(EXIT_RANGE, " ".join(str(exc).split()))

    except errors.ParameterError as exc:
        return _fail(EXIT_RANGE, str(exc))

    except errors.TruncatedStreamError as exc:
        return _fail(EXIT_TRUNCATED, str(exc))

    except errors.FormatError as exc:
        return _fail(EXIT_FORMAT, str(exc))

    except ValueError as exc:
        return _fail(EXIT_FORMAT, str(exc))

    except OSError as exc:
        return _fail(EXIT_IO, f"{exc.strerror or exc}: {exc.filename}" if exc.filename else str(exc))

    except Exception as exc:  # noqa: BLE001
        _LOGGER.debug("unexpected failure", exc_info=exc)
        return _fail(EXIT_INTERNAL, f"{type(exc).__name__}: {exc}")
