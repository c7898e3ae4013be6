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

__all__: list[str] = ["Metadata", "atomic_write", "configure_logging"]

import logging
import os
import pathlib
import tempfile
import typing

import dotenv

from . import validation

if typing.TYPE_CHECKING:
    import collections.abc as collections


LOG_FORMAT: typing.Final[str] = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"
_LOG_LEVELS: typing.Final[frozenset[str]] = frozenset(("critical", "error", "warning", "info", "debug"))


def _parse_int(key: str, value: typing.Optional[str], default: int, /, *, minimum: int, maximum: int) -> int:
    if value is None or not value.strip():
        return default

    try:
        result = int(value)

    except ValueError:
        raise RuntimeError(f"{key} must be an integer, not {value!r}") from None

    if not minimum <= result <= maximum:
        raise RuntimeError(f"{key} must be between {minimum} and {maximum}")

    return result


class Metadata:
    """Settings read from `.env` or the environment."""

    __slots__: tuple[str, ...] = ("default_depth", "jobs", "log_level")

    def __init__(self, environ: typing.Optional[collections.Mapping[str, str]] = None) -> None:
        if environ is None:
            dotenv.load_dotenv()
            environ = os.environ

        self.log_level = (environ.get("actw_log_level") or "info").lower()
        if self.log_level not in _LOG_LEVELS:
            raise RuntimeError(f"actw_log_level must be one of {', '.join(sorted(_LOG_LEVELS))}")

        self.default_depth = _parse_int(
            "actw_depth",
            environ.get("actw_depth"),
            validation.DEFAULT_DEPTH,
            minimum=validation.MINIMUM_DEPTH,
            maximum=validation.MAXIMUM_DEPTH,
        )
        self.jobs = _parse_int("actw_jobs", environ.get("actw_jobs"), os.cpu_count() or 1, minimum=1, maximum=1024)

    def __call__(self) -> Metadata:
        return self


def configure_logging(level: str, /) -> None:
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT)


def atomic_write(path: pathlib.Path, data: bytes, /) -> None:
    """Write `data` to `path` through a temporary file so no partial output is ever left behind."""
    path = path.resolve()
    file_descriptor, temp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(file_descriptor, "wb") as file:
            file.write(data)

        os.replace(temp_name, path)

    except BaseException:
        pathlib.Path(temp_name).unlink(missing_ok=True)
        raise
