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
import os

from dataclasses import dataclass
from enum import StrEnum
from typing import Any, Final, Optional, Self

from noncommuting.errors import ConfigError

# Supported Python version
MIN_PYTHON_VERSION: Final[tuple[int, int]] = (3, 11)

# Environment variable overriding the default vertex cap
CAP_ENV_VARIABLE: Final[str] = 'NONCOMM_CAP'

# Hard upper bound for group orders and graph sizes
MAX_VERTEX_CAP: Final[int] = 10_000

# Default cap for direct products and graphs
DEFAULT_VERTEX_CAP: Final[int] = 10_000

# Absolute tolerance for every comparison that involves a numeric root
DEFAULT_TOLERANCE: Final[float] = 1e-8

# Number of random 60-bit primes for modular verification
DEFAULT_PRIMES: Final[int] = 3

# Largest graph that gets an exact characteristic polynomial by default
DEFAULT_EXACT_LIMIT: Final[int] = 200

# Hard cap for exact (big integer) characteristic polynomials
MAX_EXACT_DIMENSION: Final[int] = 1000

# Faddeev-LeVerrier cross-check is only run up to this dimension
FADDEEV_LEVERRIER_LIMIT: Final[int] = 60

# Gap below which numeric eigenvalues are merged into one multiplicity
MULTIPLICITY_GAP: Final[float] = 1e-6

# Relative off-diagonal norm at which Jacobi sweeps stop
JACOBI_TOLERANCE: Final[float] = 1e-12

# Safety limit on Jacobi sweeps
JACOBI_MAX_SWEEPS: Final[int] = 100

# Groups up to this order are checked for associativity exhaustively
EXHAUSTIVE_AXIOM_ORDER: Final[int] = 64

# Random triples sampled for associativity above the exhaustive order
SAMPLED_TRIPLES: Final[int] = 100_000

# Bit size of the random primes used by modular verification
MODULAR_PRIME_BITS: Final[int] = 60


class OutputFormat(StrEnum):
    """
    Output formats of every CLI command.
    """

    UNKNOWN = 'unknown'

    TEXT = 'text'
    CSV = 'csv'
    JSON = 'json'

    @classmethod
    def _missing_(cls, value: Any) -> Self:
        return cls.UNKNOWN


class Eigensolver(StrEnum):
    """
    Numeric eigensolvers available to the spectra module.
    """

    UNKNOWN = 'unknown'

    JACOBI = 'jacobi'
    LAPACK = 'lapack'

    @classmethod
    def _missing_(cls, value: Any) -> Self:
        return cls.UNKNOWN


def _cap_from_environment() -> int:
    """
    Read vertex cap override from the environment, default cap otherwise.
    """
    raw_cap: Optional[str] = os.environ.get(CAP_ENV_VARIABLE)

    if raw_cap is None or raw_cap.strip() == '':
        return DEFAULT_VERTEX_CAP

    try:
        return int(raw_cap)

    except ValueError:
        raise ConfigError(
            f'{CAP_ENV_VARIABLE} must be an integer, got {raw_cap!r}'
        ) from None


@dataclass(frozen=True)
class RunConfig:
    """
    Settings shared by every command. Built once from the command line and
    passed down explicitly.
    """

    output_format: OutputFormat = OutputFormat.TEXT
    tolerance: float = DEFAULT_TOLERANCE
    primes: int = DEFAULT_PRIMES
    vertex_cap: int = DEFAULT_VERTEX_CAP
    jobs: int = 1
    allow_documented: bool = False
    seed: int = 0
    eigensolver: Eigensolver = Eigensolver.JACOBI
    exact_limit: int = DEFAULT_EXACT_LIMIT
    verbose: bool = False

    def __post_init__(self) -> None:
        if self.output_format is OutputFormat.UNKNOWN:
            raise ConfigError('Output format must be text, csv or json')

        if self.eigensolver is Eigensolver.UNKNOWN:
            raise ConfigError('Eigensolver must be jacobi or lapack')

        if not self.tolerance > 0:
            raise ConfigError(f'Tolerance must be positive, got {self.tolerance}')

        if self.primes < 1:
            raise ConfigError(f'Primes count must be >= 1, got {self.primes}')

        if not 1 <= self.vertex_cap <= MAX_VERTEX_CAP:
            raise ConfigError(
                f'Vertex cap must be in 1..{MAX_VERTEX_CAP}, got'
                f' {self.vertex_cap}'
            )

        if self.jobs < 1:
            raise ConfigError(f'Jobs must be >= 1, got {self.jobs}')

        if not 0 <= self.exact_limit <= MAX_EXACT_DIMENSION:
            raise ConfigError(
                f'Exact limit must be in 0..{MAX_EXACT_DIMENSION}, got'
                f' {self.exact_limit}'
            )

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> Self:
        """
        Build configuration from parsed command line. Explicit --cap wins over
        the environment variable.
        """
        vertex_cap: int = (
            args.cap if args.cap is not None else _cap_from_environment()
        )

        return cls(
            output_format=OutputFormat(args.format),
            tolerance=args.tol,
            primes=args.primes,
            vertex_cap=vertex_cap,
            jobs=args.jobs,
            allow_documented=args.allow_documented,
            seed=args.seed,
            eigensolver=Eigensolver(args.eigensolver),
            exact_limit=args.exact_limit,
            verbose=args.verbose
        )
