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

import pytest

from noncommuting.errors import GroupSpecError
from noncommuting.fields import GaloisField, prime_power


@pytest.mark.parametrize(
    'q, expected',
    [(2, (2, 1)), (7, (7, 1)), (9, (3, 2)), (16, (2, 4)), (1, None), (12, None)]
)
def test_prime_power(q, expected):
    assert prime_power(q) == expected


@pytest.mark.parametrize('p, k', [(3, 1), (2, 2), (3, 2), (2, 3), (5, 2)])
def test_every_nonzero_element_has_an_inverse(p, k):
    field = GaloisField(p=p, k=k)
    one = field.element(1)

    for a in field.elements()[1:]:
        assert a * a.inverse() == one
        assert a / a == one


@pytest.mark.parametrize('p, k', [(2, 2), (3, 2)])
def test_distributivity(p, k):
    field = GaloisField(p=p, k=k)
    elements = field.elements()

    for a in elements:
        for b in elements:
            for c in elements:
                assert a * (b + c) == a * b + a * c


def test_multiplicative_group_is_cyclic():
    field = GaloisField(p=3, k=2)

    orders = [a.multiplicative_order() for a in field.elements()[1:]]

    assert max(orders) == 8
    assert all(8 % order == 0 for order in orders)


def test_square_of_t_in_gf9_is_minus_one():
    field = GaloisField(p=3, k=2, modulus=(1, 0, 1))
    t = field.from_coordinates((0, 1))

    assert (t * t).coordinates == (2, 0)
    assert t ** 4 == field.element(1)
    assert t ** -1 == t.inverse()


def test_subtraction_and_negation():
    field = GaloisField(p=5)
    a, b = field.element(2), field.element(4)

    assert (a - b).value == 3
    assert (-a).value == 3


def test_non_prime_characteristic_is_rejected():
    with pytest.raises(GroupSpecError):
        GaloisField(p=4)


def test_reducible_modulus_is_rejected():
    # x^2 + 2 = (x + 1)(x + 2) over GF(3)
    with pytest.raises(GroupSpecError):
        GaloisField(p=3, k=2, modulus=(2, 0, 1))


def test_modulus_of_wrong_degree_is_rejected():
    with pytest.raises(GroupSpecError):
        GaloisField(p=3, k=2, modulus=(1, 1))


def test_non_monic_modulus_is_normalised():
    # 2x^2 + 2 = 2(x^2 + 1) over GF(3)
    field = GaloisField(p=3, k=2, modulus=(2, 0, 2))

    assert field.modulus == (1, 0, 1)


def test_zero_has_no_inverse():
    field = GaloisField(p=7)

    with pytest.raises(ZeroDivisionError):
        field.element(0).inverse()


def test_elements_of_different_fields_do_not_mix():
    with pytest.raises(ValueError):
        GaloisField(p=3).element(1) + GaloisField(p=5).element(1)
