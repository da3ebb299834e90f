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

import csv
import io
import json

from fractions import Fraction

from noncommuting.config import OutputFormat
from noncommuting.polynomials import IntPolynomial
from noncommuting.render import (
    render_energy,
    render_null,
    render_reports,
    render_spectrum,
    render_table
)
from noncommuting.roots import IntegerRoot, SurdRoot
from noncommuting.spectra import EnergyValue, Spectrum
from noncommuting.tables import TableCell
from noncommuting.verify import ReportStatus, VerificationReport

D6_SPECTRUM = Spectrum.from_roots(
    [
        (SurdRoot(a=2, b=2, d=7), 1), (IntegerRoot(value=0), 1),
        (IntegerRoot(value=-1), 2), (SurdRoot(a=2, b=-2, d=7), 1)
    ]
)
D6_ENERGY = EnergyValue.build(rational=Fraction(2), surds={7: Fraction(2)})

REPORT = VerificationReport(
    theorem='dihedral-le', parameters={'n': 5}, status=ReportStatus.DISCREPANCY,
    lhs='definition=70/3', rhs='closed form=60', deviation='110/3',
    notes=('stated closed form gives 60',)
)


def test_energy_text():
    assert render_energy(
        label='dihedral:4', energy=EnergyValue.build(rational=Fraction(8), surds={}),
        output_format=OutputFormat.TEXT
    ) == 'dihedral:4: 8\n'
    assert render_energy(
        label='dihedral:3', energy=D6_ENERGY, output_format=OutputFormat.TEXT
    ) == 'dihedral:3: 2+2*sqrt(7) ~ 7.2915026221\n'


def test_energy_csv():
    rows = list(
        csv.reader(
            io.StringIO(
                render_energy(label='dihedral:3', energy=D6_ENERGY, output_format=OutputFormat.CSV)
            )
        )
    )

    assert rows[0] == ['group', 'energy', 'numeric', 'error']
    assert rows[1][:3] == ['dihedral:3', '2+2*sqrt(7)', '7.2915026221']


def test_null_graph():
    assert render_null(label='cyclic:5', output_format=OutputFormat.TEXT) == (
        'cyclic:5: null graph (the group is abelian)\n'
    )
    assert json.loads(render_null(label='cyclic:5', output_format=OutputFormat.JSON)) == {
        'group': 'cyclic:5', 'vertices': 0, 'null_graph': True
    }


def test_spectrum_text():
    text = render_spectrum(
        label='dihedral:3', vertices=5, spectrum=D6_SPECTRUM, energy=D6_ENERGY,
        output_format=OutputFormat.TEXT,
        polynomial=IntPolynomial.from_high([1, 0, -9, -14, -6, 0])
    )

    assert text.splitlines() == [
        'Group: dihedral:3',
        'Vertices: 5',
        'Characteristic polynomial: x^5 - 9*x^3 - 14*x^2 - 6*x',
        'Eigenvalues:',
        '  1+sqrt(7) (multiplicity 1)',
        '  0 (multiplicity 1)',
        '  -1 (multiplicity 2)',
        '  1-sqrt(7) (multiplicity 1)',
        'Energy: 2+2*sqrt(7)',
        'Energy (numeric): 7.2915026221'
    ]


def test_spectrum_json():
    data = json.loads(
        render_spectrum(
            label='dihedral:3', vertices=5, spectrum=D6_SPECTRUM, energy=D6_ENERGY,
            output_format=OutputFormat.JSON, title='laplacian energy'
        )
    )

    assert data['charpoly'] is None
    assert data['spectrum'][0] == {
        'kind': 'surd', 'value': '1+sqrt(7)', 'a': 2, 'b': 2, 'd': 7, 'multiplicity': 1
    }
    assert data['laplacian_energy']['exact'] == '2+2*sqrt(7)'


def test_spectrum_csv():
    rows = list(
        csv.reader(
            io.StringIO(
                render_spectrum(
                    label='dihedral:3', vertices=5, spectrum=D6_SPECTRUM,
                    energy=D6_ENERGY, output_format=OutputFormat.CSV
                )
            )
        )
    )

    assert rows[0] == ['value', 'multiplicity', 'kind']
    assert rows[3] == ['-1', '2', 'integer']
    assert rows[-1] == ['2+2*sqrt(7)', '', 'energy']


def test_reports_text():
    assert render_reports(reports=[REPORT], output_format=OutputFormat.TEXT) == (
        '[DISCREPANCY] dihedral-le n=5\n'
        '  lhs: definition=70/3\n'
        '  rhs: closed form=60\n'
        '  deviation: 110/3\n'
        '  note: stated closed form gives 60\n'
    )


def test_reports_colored():
    text = render_reports(reports=[REPORT], output_format=OutputFormat.TEXT, color=True)

    assert text.startswith('[\033[33mDISCREPANCY\033[0m]')


def test_reports_json_and_csv():
    assert json.loads(
        render_reports(reports=[REPORT], output_format=OutputFormat.JSON)
    ) == [REPORT.to_json()]

    rows = list(
        csv.reader(io.StringIO(render_reports(reports=[REPORT], output_format=OutputFormat.CSV)))
    )

    assert rows[1][:3] == ['dihedral-le', 'n=5', 'DISCREPANCY']


def test_table_text():
    cells = [
        TableCell(
            group='D8', column='energy', computed='8', expected='8',
            status=ReportStatus.PASS, anchor='table1:D8'
        ),
        TableCell(
            group='D10', column='laplacian energy', computed='70/3', expected='60',
            status=ReportStatus.DISCREPANCY, anchor='table2:D10', note='documented'
        )
    ]

    assert render_table(cells=cells, output_format=OutputFormat.TEXT).splitlines() == [
        f'{"D8":<4} {"energy":<17} [PASS] 8',
        f'{"D10":<4} {"laplacian energy":<17} [DISCREPANCY] 70/3',
        '     expected: 60',
        '     note: documented'
    ]
    assert json.loads(render_table(cells=cells, output_format=OutputFormat.JSON))[1]['status'] == (
        'DISCREPANCY'
    )
