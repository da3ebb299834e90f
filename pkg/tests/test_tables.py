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

import copy

import pytest

from noncommuting.roots import IntegerRoot, SurdRoot
from noncommuting.tables import (
    TableId,
    load_published_values,
    reproduce_table,
    root_from_text
)
from noncommuting.verify import ReportStatus


@pytest.fixture(scope='module')
def published_values() -> dict:
    return load_published_values()


def test_stored_values(published_values):
    assert published_values['version'] == 1
    assert [row['group'] for row in published_values['table1']] == ['D6', 'D8', 'D10', 'D12', 'D16']
    assert [row['group'] for row in published_values['table2']] == ['D8', 'D10', 'D12', 'D14', 'D16']


@pytest.mark.parametrize(
    'text, root',
    [
        ('0', IntegerRoot(value=0)),
        ('-2', IntegerRoot(value=-2)),
        ('1+sqrt(7)', SurdRoot(a=2, b=2, d=7)),
        ('2-2*sqrt(6)', SurdRoot(a=4, b=-4, d=6)),
        ('3+sqrt(57)', SurdRoot(a=6, b=2, d=57))
    ]
)
def test_root_from_text(text, root):
    assert root_from_text(text) == root


def test_root_from_text_rejects_higher_degree():
    with pytest.raises(ValueError):
        root_from_text('sqrt(2)+sqrt(3)')


def test_table1_reproduces(config, published_values):
    cells = reproduce_table(which=TableId.TABLE1, config=config, values=published_values)

    assert len(cells) == 15
    assert [cell.column for cell in cells[:3]] == ['charpoly', 'eigenvalues', 'energy']
    assert all(cell.status is ReportStatus.PASS for cell in cells), [
        (cell.group, cell.column) for cell in cells if cell.status is not ReportStatus.PASS
    ]


def test_table2_reproduces_with_documented_discrepancies(config, published_values):
    cells = reproduce_table(which=TableId.TABLE2, config=config, values=published_values)

    failing = {
        (cell.group, cell.column): cell.status
        for cell in cells if cell.status is not ReportStatus.PASS
    }

    assert failing == {
        ('D10', 'laplacian energy'): ReportStatus.DISCREPANCY,
        ('D14', 'laplacian energy'): ReportStatus.DISCREPANCY
    }

    d10 = next(cell for cell in cells if cell.group == 'D10' and cell.column == 'laplacian energy')

    assert d10.computed == '70/3'
    assert d10.expected == '60'
    assert d10.anchor == 'table2:D10'


def test_subscript_note_is_kept(config, published_values):
    cells = reproduce_table(which=TableId.TABLE2, config=config, values=published_values)
    d12 = next(cell for cell in cells if cell.group == 'D12' and cell.column == 'charpoly')

    assert d12.status is ReportStatus.PASS
    assert 'subscripts' in d12.note


def test_wrong_stored_value_fails(config, published_values):
    values = copy.deepcopy(published_values)
    values['table1'] = values['table1'][1:2]
    values['table1'][0]['energy'] = '9'
    values['table1'][0]['eigenvalues'] = [['4', 1], ['0', 2], ['-2', 3]]

    statuses = [
        cell.status
        for cell in reproduce_table(which=TableId.TABLE1, config=config, values=values)
    ]

    assert statuses == [ReportStatus.PASS, ReportStatus.FAIL, ReportStatus.FAIL]


def test_undocumented_mismatch_fails(config, published_values):
    values = copy.deepcopy(published_values)
    values['table2'] = values['table2'][1:2]
    del values['table2'][0]['documented']

    cells = reproduce_table(which=TableId.TABLE2, config=config, values=values)

    assert cells[-1].status is ReportStatus.FAIL


def test_unknown_table(config):
    assert TableId('table3') is TableId.UNKNOWN

    with pytest.raises(ValueError):
        reproduce_table(which=TableId.UNKNOWN, config=config)
