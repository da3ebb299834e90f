# Copyright 2024 The noncommuting authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
# or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import argparse

import pytest

from noncommuting.config import (
    CAP_ENV_VARIABLE,
    DEFAULT_VERTEX_CAP,
    Eigensolver,
    OutputFormat,
    RunConfig
)
from noncommuting.console import ConsoleColor, colored_status, progress
from noncommuting.errors import ConfigError


def _args(**overrides) -> argparse.Namespace:
    values = {
        'format': 'text', 'tol': 1e-8, 'primes': 3, 'cap': None, 'jobs': 1,
        'allow_documented': False, 'seed': 0, 'eigensolver': 'jacobi',
        'exact_limit': 200, 'verbose': False
    }
    values.update(overrides)

    return argparse.Namespace(**values)


def test_defaults(monkeypatch):
    monkeypatch.delenv(CAP_ENV_VARIABLE, raising=False)

    config = RunConfig.from_args(_args())

    assert config == RunConfig()
    assert config.vertex_cap == DEFAULT_VERTEX_CAP


def test_unknown_enum_values():
    assert OutputFormat('xml') is OutputFormat.UNKNOWN
    assert Eigensolver('qr') is Eigensolver.UNKNOWN
    assert OutputFormat('json') is OutputFormat.JSON


@pytest.mark.parametrize(
    'overrides',
    [
        {'format': 'xml'}, {'eigensolver': 'qr'}, {'tol': 0.0}, {'primes': 0},
        {'cap': 0}, {'cap': 10_001}, {'jobs': 0}, {'exact_limit': 1001}
    ]
)
def test_invalid_settings(overrides):
    with pytest.raises(ConfigError):
        RunConfig.from_args(_args(**overrides))


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv(CAP_ENV_VARIABLE, '500')

    assert RunConfig.from_args(_args()).vertex_cap == 500
    assert RunConfig.from_args(_args(cap=64)).vertex_cap == 64


def test_bad_cap_in_environment(monkeypatch):
    monkeypatch.setenv(CAP_ENV_VARIABLE, 'many')

    with pytest.raises(ConfigError):
        RunConfig.from_args(_args())


def test_colored_status():
    assert colored_status(status='PASS', enabled=False) == 'PASS'
    assert colored_status(status='FAIL', enabled=True) == (
        f'{ConsoleColor.RED}FAIL{ConsoleColor.END.value}'
    )
    assert colored_status(status='SKIPPED', enabled=True) == 'SKIPPED'


def test_progress_goes_to_stderr(capsys):
    progress(message='working', verbose=True)
    progress(message='hidden', verbose=False)

    captured = capsys.readouterr()

    assert captured.out == ''
    assert captured.err == 'working\n'
