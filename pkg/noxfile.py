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

import pathlib

import nox

_SERVICE = pathlib.Path("actw_compressor")
_REQUIREMENTS = str(_SERVICE / "requirements.txt")
_DEV_REQUIREMENTS = str(_SERVICE / "dev-requirements.txt")
_SOURCES = [str(_SERVICE), "noxfile.py"]

nox.options.sessions = ["reformat", "lint", "type-check", "test"]


def _install(session: nox.Session) -> None:
    session.install("-r", _REQUIREMENTS, "-r", _DEV_REQUIREMENTS)


@nox.session(name="test", reuse_venv=True)
def test(session: nox.Session) -> None:
    """Run the quick tests, pass `-- slow` to run the desk-scale acceptance runs too."""
    _install(session)
    marker = [] if "slow" in session.posargs else ["-m", "not slow"]
    session.run("pytest", "--cov=actw_compressor/src", "--cov-report=term-missing", *marker)


@nox.session(name="type-check", reuse_venv=True)
def type_check(session: nox.Session) -> None:
    _install(session)
    with session.chdir(_SERVICE):
        session.run("mypy", "src", "main.py", "--config-file", "../mypy.ini")


@nox.session(name="lint", reuse_venv=True)
def lint(session: nox.Session) -> None:
    _install(session)
    session.run("flake8", "--max-line-length", "120", "--extend-ignore", "E203,W503", *_SOURCES)


@nox.session(name="reformat", reuse_venv=True)
def reformat(session: nox.Session) -> None:
    session.install("-r", _DEV_REQUIREMENTS)
    session.run("black", *_SOURCES)
    session.run("isort", *_SOURCES)
