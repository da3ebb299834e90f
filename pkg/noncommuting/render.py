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

"""
Text, CSV and JSON rendering of command results. Every function returns the
full output as a string, so identical inputs give byte-identical output.
"""

import csv
import io
import json

from typing import Any, Optional

from noncommuting.config import OutputFormat
from noncommuting.console import colored_status
from noncommuting.polynomials import IntPolynomial
from noncommuting.spectra import EnergyValue, Spectrum
from noncommuting.tables import TableCell
from noncommuting.verify import VerificationReport


def _csv(rows: list[list[Any]]) -> str:
    buffer: io.StringIO = io.StringIO()
    writer = csv.writer(buffer)

    writer.writerows(rows)

    return buffer.getvalue()


def _json(data: Any) -> str:
    return json.dumps(data, indent=2) + '\n'


def render_null(label: str, output_format: OutputFormat) -> str:
    """
    Notice for an abelian group, whose non-commuting graph has no vertices.
    """
    if output_format is OutputFormat.JSON:
        return _json({'group': label, 'vertices': 0, 'null_graph': True})

    if output_format is OutputFormat.CSV:
        return _csv([['group', 'vertices', 'null_graph'], [label, 0, 'true']])

    return f'{label}: null graph (the group is abelian)\n'


def render_spectrum(
    label: str, vertices: int, spectrum: Spectrum, energy: EnergyValue,
    output_format: OutputFormat, polynomial: Optional[IntPolynomial] = None,
    title: str = 'energy'
) -> str:
    """
    Eigenvalues with multiplicities, largest first, and the matching energy.
    """
    if output_format is OutputFormat.JSON:
        return _json(
            {
                'group': label,
                'vertices': vertices,
                'charpoly': polynomial.to_json() if polynomial is not None else None,
                'spectrum': spectrum.to_json(),
                title.replace(' ', '_'): energy.to_json()
            }
        )

    if output_format is OutputFormat.CSV:
        rows: list[list[Any]] = [['value', 'multiplicity', 'kind']]

        for item, entry in zip(spectrum.to_json(), spectrum.entries):
            rows.append([entry.root.render(), entry.multiplicity, item['kind']])

        rows.append([energy.render(), '', title])

        return _csv(rows)

    lines: list[str] = [f'Group: {label}', f'Vertices: {vertices}']

    if polynomial is not None:
        lines.append(f'Characteristic polynomial: {polynomial.render()}')

    lines.append('Eigenvalues:')
    lines.extend(
        f'  {entry.root.render()} (multiplicity {entry.multiplicity})'
        for entry in spectrum.entries
    )
    lines.append(f'{title.capitalize()}: {energy.render()}')

    if energy.exact and energy.surds:
        lines.append(f'{title.capitalize()} (numeric): {energy.numeric:.10f}')

    return '\n'.join(lines) + '\n'


def render_energy(
    label: str, energy: EnergyValue, output_format: OutputFormat
) -> str:
    if output_format is OutputFormat.JSON:
        return _json({'group': label, 'energy': energy.to_json()})

    if output_format is OutputFormat.CSV:
        return _csv(
            [
                ['group', 'energy', 'numeric', 'error'],
                [label, energy.render(), f'{energy.numeric:.10f}', f'{energy.error:.3e}']
            ]
        )

    if energy.exact and energy.surds:
        return f'{label}: {energy.render()} ~ {energy.numeric:.10f}\n'

    return f'{label}: {energy.render()}\n'


def render_reports(
    reports: list[VerificationReport], output_format: OutputFormat,
    color: bool = False
) -> str:
    if output_format is OutputFormat.JSON:
        return _json([report.to_json() for report in reports])

    if output_format is OutputFormat.CSV:
        return _csv(
            [['theorem', 'parameters', 'status', 'lhs', 'rhs', 'deviation', 'notes']]
            + [
                [
                    report.theorem, report.parameter_text(), str(report.status),
                    report.lhs, report.rhs, report.deviation,
                    '; '.join(report.notes)
                ]
                for report in reports
            ]
        )

    lines: list[str] = []

    for report in reports:
        lines.append(
            f'[{colored_status(status=str(report.status), enabled=color)}]'
            f' {report.theorem} {report.parameter_text()}'.rstrip()
        )
        lines.append(f'  lhs: {report.lhs}')
        lines.append(f'  rhs: {report.rhs}')
        lines.append(f'  deviation: {report.deviation}')
        lines.extend(f'  note: {note}' for note in report.notes)

    return '\n'.join(lines) + '\n'


def render_table(
    cells: list[TableCell], output_format: OutputFormat, color: bool = False
) -> str:
    if output_format is OutputFormat.JSON:
        return _json([cell.to_json() for cell in cells])

    if output_format is OutputFormat.CSV:
        return _csv(
            [['group', 'column', 'computed', 'expected', 'status', 'anchor', 'note']]
            + [
                [
                    cell.group, cell.column, cell.computed, cell.expected,
                    str(cell.status), cell.anchor, cell.note
                ]
                for cell in cells
            ]
        )

    lines: list[str] = []

    for cell in cells:
        lines.append(
            f'{cell.group:<4} {cell.column:<17}'
            f' [{colored_status(status=str(cell.status), enabled=color)}]'
            f' {cell.computed}'
        )

        if str(cell.status) != 'PASS':
            lines.append(f'     expected: {cell.expected}')

        if cell.note:
            lines.append(f'     note: {cell.note}')

    return '\n'.join(lines) + '\n'
