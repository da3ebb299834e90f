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
Reproduction of the published dihedral tables: every cell is recomputed from
the brute-force graph and compared with the stored value in
data/published_values.json.
"""

import json

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from pathlib import Path
from typing import Any, Final, Optional, Self

import numpy as np
import sympy

from noncommuting.charpoly import charpoly
from noncommuting.config import RunConfig
from noncommuting.console import progress
from noncommuting.formulas import dihedral_laplacian_energy_definition
from noncommuting.graphs import Graph, laplacian, noncommuting_graph
from noncommuting.groups import make_dihedral
from noncommuting.polynomials import IntPolynomial
from noncommuting.roots import ExactRoot, IntegerRoot, solve_quadratic
from noncommuting.spectra import (
    EnergyValue,
    Spectrum,
    assemble_exact_spectrum,
    eigenvalues_numeric,
    laplacian_energy,
    spectrum_energy
)
from noncommuting.verify import ReportStatus

# Stored published values, one entry per table row
PUBLISHED_VALUES_PATH: Final[Path] = Path(__file__).parent / 'data' / 'published_values.json'

# Distance used to pick the matching conjugate of a stored surd
ROOT_MATCH_TOLERANCE: Final[float] = 1e-9


class TableId(StrEnum):
    UNKNOWN = 'unknown'

    # Adjacency: characteristic polynomial, eigenvalues, energy.
    TABLE1 = 'table1'

    # Laplacian: characteristic polynomial, eigenvalues, Laplacian energy.
    TABLE2 = 'table2'

    @classmethod
    def _missing_(cls, value: Any) -> Self:
        return cls.UNKNOWN


@dataclass(frozen=True)
class TableCell:
    group: str
    column: str
    computed: str
    expected: str
    status: ReportStatus
    anchor: str = ''
    note: str = ''

    def to_json(self) -> dict[str, Any]:
        return {
            'group': self.group,
            'column': self.column,
            'computed': self.computed,
            'expected': self.expected,
            'status': str(self.status),
            'anchor': self.anchor,
            'note': self.note
        }


def load_published_values(path: Path = PUBLISHED_VALUES_PATH) -> dict[str, Any]:
    with path.open(encoding='utf-8') as f:
        return json.load(f)


def root_from_text(text: str) -> ExactRoot:
    """
    Integer or quadratic surd from its text form, e.g. '2-2*sqrt(6)'.
    """
    value: sympy.Expr = sympy.sympify(text)

    if value.is_Integer:
        return IntegerRoot(value=int(value))

    symbol: sympy.Symbol = sympy.Symbol('x')
    coefficients: list[Any] = sympy.Poly(
        sympy.minimal_polynomial(value, symbol), symbol
    ).all_coeffs()

    if len(coefficients) != 3 or coefficients[0] != 1:
        raise ValueError(f'{text!r} is not a quadratic algebraic integer')

    for root in solve_quadratic(a1=int(coefficients[1]), a0=int(coefficients[2])):
        if abs(root.numeric - float(value)) < ROOT_MATCH_TOLERANCE:
            return root

    raise ValueError(f'Cannot match {text!r} to a root of its minimal polynomial')


def _spectrum_from_rows(rows: list[list[Any]]) -> Spectrum:
    return Spectrum.from_roots(
        (root_from_text(str(text)), int(multiplicity)) for text, multiplicity in rows
    )


def _polynomial_cell(
    row: dict[str, Any], computed: IntPolynomial
) -> TableCell:
    expected: IntPolynomial = IntPolynomial.parse(row['charpoly']).sign_normalized()

    return TableCell(
        group=row['group'], column='charpoly', computed=computed.render(),
        expected=row['charpoly'],
        status=ReportStatus.PASS if computed == expected else ReportStatus.FAIL,
        anchor=row['anchor'], note=row.get('note', '')
    )


def _spectrum_cell(row: dict[str, Any], computed: Spectrum) -> TableCell:
    expected: Spectrum = _spectrum_from_rows(row['eigenvalues'])

    return TableCell(
        group=row['group'], column='eigenvalues', computed=computed.render(),
        expected=expected.render(),
        status=ReportStatus.PASS if computed == expected else ReportStatus.FAIL,
        anchor=row['anchor']
    )


def _dihedral_graph(n: int, config: RunConfig) -> Graph:
    progress(message=f'Building group dihedral:{n}...', verbose=config.verbose)

    return noncommuting_graph(g=make_dihedral(n), cap=config.vertex_cap)


def _table1_row(row: dict[str, Any], config: RunConfig) -> list[TableCell]:
    graph: Graph = _dihedral_graph(n=row['n'], config=config)
    polynomial: IntPolynomial = charpoly(graph.adjacency)
    spectrum: Spectrum = assemble_exact_spectrum(polynomial)
    energy_value: EnergyValue = spectrum_energy(spectrum)
    numeric: float = float(
        np.abs(
            eigenvalues_numeric(matrix=graph.adjacency, solver=config.eigensolver)
        ).sum()
    )

    expected: sympy.Expr = sympy.sympify(row['energy'])
    ok: bool = (
        energy_value.exact
        and sympy.simplify(energy_value.to_sympy() - expected) == 0
        and energy_value.close_to(value=numeric, tolerance=config.tolerance)
    )

    return [
        _polynomial_cell(row=row, computed=polynomial),
        _spectrum_cell(row=row, computed=spectrum),
        TableCell(
            group=row['group'], column='energy', computed=energy_value.render(),
            expected=row['energy'],
            status=ReportStatus.PASS if ok else ReportStatus.FAIL,
            anchor=row['anchor'], note=f'numeric {numeric:.10f}'
        )
    ]


def _table2_row(row: dict[str, Any], config: RunConfig) -> list[TableCell]:
    graph: Graph = _dihedral_graph(n=row['n'], config=config)
    polynomial: IntPolynomial = charpoly(laplacian(graph).matrix)
    spectrum: Spectrum = assemble_exact_spectrum(polynomial)
    computed: Fraction = laplacian_energy(graph=graph).rational
    expected: Fraction = Fraction(row['energy'])

    documented: Optional[dict[str, str]] = row.get('documented')
    note: str = ''

    if computed == expected:
        status: ReportStatus = ReportStatus.PASS

    elif (
        documented is not None
        and computed == Fraction(documented['definition'])
        and computed == dihedral_laplacian_energy_definition(row['n'])
    ):
        status = ReportStatus.DISCREPANCY
        note = documented['note']

    else:
        status = ReportStatus.FAIL

    return [
        _polynomial_cell(row=row, computed=polynomial),
        _spectrum_cell(row=row, computed=spectrum),
        TableCell(
            group=row['group'], column='laplacian energy',
            computed=str(computed), expected=row['energy'], status=status,
            anchor=row['anchor'], note=note
        )
    ]


def reproduce_table(
    which: TableId, config: RunConfig, values: Optional[dict[str, Any]] = None
) -> list[TableCell]:
    """
    Recompute every cell of a table, in row order.
    """
    if which is TableId.UNKNOWN:
        raise ValueError('Table must be table1 or table2')

    stored: dict[str, Any] = values if values is not None else load_published_values()
    row_builder = _table1_row if which is TableId.TABLE1 else _table2_row

    return [
        cell
        for row in stored[str(which)]
        for cell in row_builder(row=row, config=config)
    ]
