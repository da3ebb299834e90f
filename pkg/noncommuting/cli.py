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
import sys

from fractions import Fraction
from typing import Callable, Final, Optional

from noncommuting.config import (
    DEFAULT_EXACT_LIMIT,
    DEFAULT_PRIMES,
    DEFAULT_TOLERANCE,
    MIN_PYTHON_VERSION,
    Eigensolver,
    OutputFormat,
    RunConfig
)
from noncommuting.console import progress
from noncommuting.errors import ConfigError, GroupSpecError, VertexCapError
from noncommuting.graphs import (
    Graph,
    augmented_adjacency,
    dumps,
    edge_count,
    laplacian,
    noncommuting_graph,
    to_edge_list
)
from noncommuting.groups import FiniteGroup, GroupSpec, parse_group_spec
from noncommuting.render import (
    render_energy,
    render_null,
    render_reports,
    render_spectrum,
    render_table
)
from noncommuting.spectra import (
    EnergyValue,
    SpectralData,
    matrix_spectrum,
    numeric_energy,
    spectrum_energy
)
from noncommuting.tables import TableCell, TableId, reproduce_table
from noncommuting.verify import (
    ReportStatus,
    Theorem,
    VerificationReport,
    build_tasks,
    run_tasks
)

# Exit codes: everything passed, some check failed, bad usage
EXIT_OK: Final[int] = 0
EXIT_MISMATCH: Final[int] = 1
EXIT_USAGE: Final[int] = 2


def parse_range(text: str) -> list[int]:
    """
    Parse '3..12', '5' or '3,4,5' (parts may be mixed) into a sorted list.
    """
    values: set[int] = set()

    try:
        for part in text.split(','):
            if '..' in part:
                low, high = part.split('..')
                values.update(range(int(low), int(high) + 1))

            else:
                values.add(int(part))

    except ValueError:
        raise argparse.ArgumentTypeError(
            f'Expected a range like 3..12, 5 or 3,4,5, got {text!r}'
        ) from None

    if not values:
        raise argparse.ArgumentTypeError(f'Empty range {text!r}')

    return sorted(values)


def _common_arguments() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)

    parser.add_argument(
        '--format', '-f', help='Output format: text, csv or json',
        default=str(OutputFormat.TEXT)
    )

    parser.add_argument(
        '--tol', help='Numeric tolerance', type=float, default=DEFAULT_TOLERANCE
    )

    parser.add_argument(
        '--primes', help='Number of random primes for modular checks',
        type=int, default=DEFAULT_PRIMES
    )

    parser.add_argument(
        '--cap', help='Vertex cap (overrides NONCOMM_CAP)', type=int,
        default=None
    )

    parser.add_argument(
        '--allow-documented', help='Count documented discrepancies as passes',
        action='store_true'
    )

    parser.add_argument(
        '--jobs', '-j', help='Worker processes for verification sweeps',
        type=int, default=1
    )

    parser.add_argument(
        '--seed', help='Seed for random primes and random cases', type=int,
        default=0
    )

    parser.add_argument(
        '--eigensolver', help='Numeric eigensolver: jacobi or lapack',
        default=str(Eigensolver.JACOBI)
    )

    parser.add_argument(
        '--exact-limit',
        help='Largest vertex count for exact characteristic polynomials',
        type=int, default=DEFAULT_EXACT_LIMIT
    )

    parser.add_argument(
        '--verbose', '-v', help='Print progress to stderr', action='store_true'
    )

    return parser


def parse_args(argv: Optional[list[str]] = None) -> argparse.Namespace:
    common: argparse.ArgumentParser = _common_arguments()

    parser = argparse.ArgumentParser(
        prog='noncommuting',
        description='Spectra and energies of non-commuting graphs of finite groups'
    )

    commands = parser.add_subparsers(dest='command', required=True)

    for name, description in (
        ('spectrum', 'Adjacency spectrum of the non-commuting graph'),
        ('energy', 'Energy of the non-commuting graph'),
        ('laplacian', 'Laplacian spectrum and Laplacian energy')
    ):
        command = commands.add_parser(name, help=description, parents=[common])
        command.add_argument(
            'spec', help='Group, e.g. dihedral:5, gl2:3, prod(dihedral:4,cyclic:2)'
        )

    verify = commands.add_parser(
        'verify', help='Check a theorem against brute force', parents=[common]
    )

    verify.add_argument(
        'theorem', help=f'One of: {", ".join(t for t in Theorem if t is not Theorem.UNKNOWN)}'
    )

    verify.add_argument(
        '--n', help='Dihedral parameter range, e.g. 3..12', type=parse_range,
        default=None
    )

    verify.add_argument(
        '--q', help='Field size range, e.g. 3,4', type=parse_range,
        default=None
    )

    verify.add_argument(
        '--g', help='Group for product and block checks (repeatable)',
        action='append', default=None
    )

    verify.add_argument(
        '--h', help='Abelian factor for product-scaling (repeatable)',
        action='append', default=None
    )

    table = commands.add_parser(
        'table', help='Reproduce a published table', parents=[common]
    )

    table.add_argument('which', help='table1 or table2')

    export = commands.add_parser(
        'export-graph', help='Write the graph as an edge list or JSON',
        parents=[common]
    )

    export.add_argument('spec', help='Group descriptor')

    export.add_argument(
        '--augmented', help='Keep central elements as isolated vertices',
        action='store_true'
    )

    return parser.parse_args(argv)


def _build(spec: GroupSpec, config: RunConfig) -> FiniteGroup:
    progress(message=f'Building group {spec}...', verbose=config.verbose)

    return spec.build(cap=config.vertex_cap)


def _energy_of(
    data: SpectralData, config: RunConfig, shift: Fraction = Fraction(0)
) -> EnergyValue:
    if data.eigenvalues is not None:
        return numeric_energy(
            eigenvalues=data.eigenvalues, tol=config.tolerance, shift=float(shift)
        )

    return spectrum_energy(spectrum=data.spectrum, shift=shift)


def cmd_spectrum(args: argparse.Namespace, config: RunConfig) -> int:
    spec: GroupSpec = parse_group_spec(args.spec)
    graph: Graph = noncommuting_graph(g=_build(spec, config), cap=config.vertex_cap)

    if graph.is_null():
        print(render_null(label=str(spec), output_format=config.output_format), end='')

        return EXIT_OK

    progress(
        message=f'Computing spectrum of {graph.vertex_count} vertices...',
        verbose=config.verbose
    )

    data: SpectralData = matrix_spectrum(
        matrix=graph.adjacency, exact_limit=config.exact_limit,
        tol=config.tolerance, solver=config.eigensolver
    )

    print(
        render_spectrum(
            label=str(spec), vertices=graph.vertex_count, spectrum=data.spectrum,
            energy=_energy_of(data=data, config=config),
            output_format=config.output_format, polynomial=data.polynomial
        ),
        end=''
    )

    return EXIT_OK


def cmd_energy(args: argparse.Namespace, config: RunConfig) -> int:
    spec: GroupSpec = parse_group_spec(args.spec)
    graph: Graph = noncommuting_graph(g=_build(spec, config), cap=config.vertex_cap)

    data: Optional[SpectralData] = None if graph.is_null() else matrix_spectrum(
        matrix=graph.adjacency, exact_limit=config.exact_limit,
        tol=config.tolerance, solver=config.eigensolver
    )
    value: EnergyValue = (
        EnergyValue.build(rational=Fraction(0), surds={}) if data is None
        else _energy_of(data=data, config=config)
    )

    print(
        render_energy(label=str(spec), energy=value, output_format=config.output_format),
        end=''
    )

    return EXIT_OK


def cmd_laplacian(args: argparse.Namespace, config: RunConfig) -> int:
    spec: GroupSpec = parse_group_spec(args.spec)
    graph: Graph = noncommuting_graph(g=_build(spec, config), cap=config.vertex_cap)

    if graph.is_null():
        print(render_null(label=str(spec), output_format=config.output_format), end='')

        return EXIT_OK

    mean: Fraction = Fraction(2 * edge_count(graph), graph.vertex_count)
    data: SpectralData = matrix_spectrum(
        matrix=laplacian(graph).matrix, exact_limit=config.exact_limit,
        tol=config.tolerance, solver=config.eigensolver
    )

    print(
        render_spectrum(
            label=str(spec), vertices=graph.vertex_count, spectrum=data.spectrum,
            energy=_energy_of(data=data, config=config, shift=mean),
            output_format=config.output_format, polynomial=data.polynomial,
            title='laplacian energy'
        ),
        end=''
    )

    return EXIT_OK


def _color(config: RunConfig) -> bool:
    return config.output_format is OutputFormat.TEXT and sys.stdout.isatty()


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    theorem: Theorem = Theorem(args.theorem)

    if theorem is Theorem.UNKNOWN:
        print(f'Unknown theorem {args.theorem!r}', file=sys.stderr)

        return EXIT_USAGE

    reports: list[VerificationReport] = run_tasks(
        tasks=build_tasks(
            theorem=theorem, config=config, n_values=args.n, q_values=args.q,
            g_specs=args.g, h_specs=args.h
        ),
        config=config
    )

    print(
        render_reports(
            reports=reports, output_format=config.output_format,
            color=_color(config)
        ),
        end=''
    )

    if all(report.passed(allow_documented=config.allow_documented) for report in reports):
        return EXIT_OK

    return EXIT_MISMATCH


def cmd_table(args: argparse.Namespace, config: RunConfig) -> int:
    which: TableId = TableId(args.which)

    if which is TableId.UNKNOWN:
        print(f'Unknown table {args.which!r}, use table1 or table2', file=sys.stderr)

        return EXIT_USAGE

    cells: list[TableCell] = reproduce_table(which=which, config=config)

    print(
        render_table(cells=cells, output_format=config.output_format, color=_color(config)),
        end=''
    )

    if all(
        cell.status is ReportStatus.PASS
        or (config.allow_documented and cell.status is ReportStatus.DISCREPANCY)
        for cell in cells
    ):
        return EXIT_OK

    return EXIT_MISMATCH


def cmd_export_graph(args: argparse.Namespace, config: RunConfig) -> int:
    spec: GroupSpec = parse_group_spec(args.spec)
    group: FiniteGroup = _build(spec, config)
    graph: Graph = (
        augmented_adjacency(g=group, cap=config.vertex_cap) if args.augmented
        else noncommuting_graph(g=group, cap=config.vertex_cap)
    )

    if config.output_format is OutputFormat.JSON:
        print(dumps(graph))

    else:
        print(to_edge_list(graph), end='')

    return EXIT_OK


COMMANDS: Final[dict[str, Callable[[argparse.Namespace, RunConfig], int]]] = {
    'spectrum': cmd_spectrum,
    'energy': cmd_energy,
    'laplacian': cmd_laplacian,
    'verify': cmd_verify,
    'table': cmd_table,
    'export-graph': cmd_export_graph
}


def main(argv: Optional[list[str]] = None) -> int:
    if sys.version_info < MIN_PYTHON_VERSION:
        raise RuntimeError(
            f'Python version >='
            f' {".".join(str(version) for version in MIN_PYTHON_VERSION)} is'
            f' required'
        )

    args: argparse.Namespace = parse_args(argv)

    try:
        config: RunConfig = RunConfig.from_args(args)

        return COMMANDS[args.command](args, config)

    except (ConfigError, GroupSpecError, VertexCapError) as e:
        print(f'Error: {e}', file=sys.stderr)

        return EXIT_USAGE

    except Exception as e:
        # Anything else is a bug or an unexpected input: show where, then
        # let the traceback through.
        print(f'Exception occurred in {args.command}: {e}', file=sys.stderr)

        raise


if __name__ == '__main__':
    sys.exit(main())
