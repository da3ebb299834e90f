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

import numpy as np
import pytest

from noncommuting.errors import GroupSpecError, VertexCapError
from noncommuting.groups import (
    CyclicSpec,
    DihedralSpec,
    GL2Spec,
    ProductSpec,
    SymmetricSpec,
    center,
    centralizer,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_gl2,
    make_symmetric,
    parse_group_spec,
    validate_group
)


@pytest.mark.parametrize(
    'group',
    [
        make_dihedral(3), make_dihedral(4), make_dihedral(7), make_cyclic(6),
        make_symmetric(3), make_symmetric(4), make_gl2(3),
        direct_product(make_dihedral(3), make_cyclic(2))
    ],
    ids=lambda group: group.label
)
def test_group_axioms(group):
    validate_group(group)


@pytest.mark.parametrize('q, order', [(3, 48), (4, 180), (5, 480)])
def test_gl2_order(q, order):
    assert make_gl2(q).order == order


@pytest.mark.parametrize('q', [3, 4, 5])
def test_gl2_center_is_scalar_matrices(q):
    group = make_gl2(q)

    assert len(center(group)) == q - 1
    assert group.element_label(group.identity) == '[[1,0],[0,1]]'


@pytest.mark.parametrize('n, central', [(3, 1), (4, 2), (5, 1), (6, 2), (8, 2)])
def test_dihedral_center(n, central):
    group = make_dihedral(n)

    assert group.order == 2 * n
    assert len(center(group)) == central


def test_dihedral_element_order_and_labels():
    group = make_dihedral(4)

    assert [group.element_label(x) for x in group.elements] == [
        'e', 'r^2', 'r', 'r^3', 's', 's*r^2', 's*r', 's*r^3'
    ]
    assert center(group) == frozenset({0, 1})


def test_reflection_centralizer_in_odd_dihedral():
    group = make_dihedral(5)
    reflection = 5

    assert centralizer(group, reflection) == frozenset({0, reflection})


def test_abelian_groups():
    assert make_cyclic(5).is_abelian()
    assert not make_dihedral(3).is_abelian()
    assert not make_symmetric(3).is_abelian()
    assert direct_product(make_cyclic(2), make_cyclic(3)).is_abelian()


def test_symmetric_identity_first():
    group = make_symmetric(3)

    assert group.order == 6
    assert group.element_label(0) == '[0 1 2]'
    assert center(group) == frozenset({0})


def test_product_commutation_matches_table():
    group = direct_product(make_dihedral(3), make_dihedral(4))
    table = group.table

    assert np.array_equal(group.commutation_matrix, table == table.T)
    assert len(center(group)) == 2


def test_product_element_labels():
    group = direct_product(make_dihedral(3), make_cyclic(2))

    assert group.order == 12
    assert group.element_label(1) == '(e, a)'


def test_product_over_cap_is_rejected():
    with pytest.raises(VertexCapError):
        direct_product(make_dihedral(8), make_dihedral(8), cap=100)


def test_inverses():
    group = make_gl2(3)

    for x in group.elements:
        assert group.multiply(x, group.inverse(x)) == group.identity


@pytest.mark.parametrize('n', [0, 1, 2])
def test_small_dihedral_is_rejected(n):
    with pytest.raises(GroupSpecError):
        make_dihedral(n)


@pytest.mark.parametrize('q', [2, 6, 10])
def test_bad_gl2_field_size_is_rejected(q):
    with pytest.raises(GroupSpecError):
        make_gl2(q)


@pytest.mark.parametrize(
    'text, expected',
    [
        ('dihedral:5', DihedralSpec(n=5)),
        ('cyclic:1', CyclicSpec(n=1)),
        ('sym:4', SymmetricSpec(k=4)),
        ('gl2:3', GL2Spec(q=3)),
        ('gl2:9:[1,0,1]', GL2Spec(q=9, irreducible=(1, 0, 1))),
        (
            'prod(dihedral:4,cyclic:2)',
            ProductSpec(left=DihedralSpec(n=4), right=CyclicSpec(n=2))
        ),
        (
            'prod(prod(dihedral:4, cyclic:2), cyclic:2)',
            ProductSpec(
                left=ProductSpec(left=DihedralSpec(n=4), right=CyclicSpec(n=2)),
                right=CyclicSpec(n=2)
            )
        )
    ]
)
def test_parse_group_spec(text, expected):
    spec = parse_group_spec(text)

    assert spec == expected
    assert parse_group_spec(str(spec)) == spec


@pytest.mark.parametrize(
    'text',
    [
        'dihedral:2', 'cyclic:0', 'sym:7', 'gl2:6', 'gl2:2', 'quaternion:8',
        'dihedral:4x', 'prod(dihedral:4)', 'dihedral:', ''
    ]
)
def test_parse_group_spec_rejects(text):
    with pytest.raises(GroupSpecError):
        parse_group_spec(text)


def test_spec_build():
    group = parse_group_spec('prod(dihedral:3,sym:3)').build()

    assert group.order == 36
    assert group.label == 'prod(dihedral:3,sym:3)'
