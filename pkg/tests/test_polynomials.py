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

from fractions import Fraction

import pytest

from noncommuting.errors import FactorMismatchError
from noncommuting.polynomials import (
    FactoredPolynomial,
    IntPolynomial,
    deflate,
    deflate_mod,
    gcd,
    identity_mismatch,
    multiplicity_of,
    poly_identity_check,
    square_free_decomposition
)

X = IntPolynomial.x()


def test_parse_displayed_form():
    parsed = IntPolynomial.parse('(-x)^3*(-x+4)*(-x-2)^2')

    assert parsed.sign_normalized() == X ** 3 * (X - 4) * (X + 2) ** 2
    assert parsed.sign_normalized().coefficients == (0, 0, 0, -16, -12, 0, 1)


@pytest.mark.parametrize('text', ['x^2 + 1/2', 'x +* 2', 'x^2 + y'])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        IntPolynomial.parse(text)


@pytest.mark.parametrize(
    'polynomial, text',
    [
        (IntPolynomial.from_high([1, -34, -312, -576]), 'x^3 - 34*x^2 - 312*x - 576'),
        (IntPolynomial.from_high([-1, 0, 2, 0]), '-x^3 + 2*x'),
        (IntPolynomial(), '0'),
        (IntPolynomial.constant(-7), '-7')
    ]
)
def test_render(polynomial, text):
    assert polynomial.render() == text
    assert IntPolynomial.parse(text) == polynomial


def test_trailing_zeros_are_stripped():
    assert IntPolynomial(coefficients=(1, 2, 0, 0)).degree == 1
    assert IntPolynomial(coefficients=(0, 0)).is_zero()


def test_arithmetic():
    p = X ** 2 - 1

    assert p + 1 == X ** 2
    assert 1 - p == 2 - X ** 2
    assert 3 * p == IntPolynomial(coefficients=(-3, 0, 3))
    assert p(3) == 8
    assert p(Fraction(1, 2)) == Fraction(-3, 4)
    assert p.derivative() == 2 * X


def test_exact_division():
    quotient, remainder = divmod(X ** 3 - 1, X - 1)

    assert quotient == X ** 2 + X + 1
    assert remainder.is_zero()


def test_deflate_reports_remainder():
    with pytest.raises(FactorMismatchError) as error:
        deflate(poly=X ** 2 + 1, factor=X - 1)

    assert error.value.remainder == IntPolynomial.constant(2)


def test_deflate_multiplicity():
    poly = X ** 4 * (X + 2) ** 3

    assert deflate(poly=poly, factor=X + 2, multiplicity=3) == X ** 4
    assert multiplicity_of(poly=poly, factor=X + 2) == 3
    assert multiplicity_of(poly=poly, factor=X) == 4
    assert poly.valuation() == 4

    with pytest.raises(FactorMismatchError):
        deflate(poly=poly, factor=X + 2, multiplicity=4)


def test_gcd_is_primitive():
    a = 6 * (X - 1) ** 2 * (X + 2)
    b = -4 * (X - 1) * (X + 3)

    assert gcd(a, b) == X - 1


def test_square_free_decomposition():
    poly = 5 * (X - 1) ** 2 * (X + 2) * (X ** 2 - 3) ** 3

    assert square_free_decomposition(poly) == [
        (X + 2, 1), (X - 1, 2), (X ** 2 - 3, 3)
    ]


def test_scale_roots():
    poly = (X - 1) * (X + 2)

    assert poly.scale_roots(3) == (X - 3) * (X + 6)


def test_primitive_part_and_sign():
    poly = -6 * X ** 2 + 4

    assert poly.content() == 2
    assert poly.primitive_part() == 3 * X ** 2 - 2
    assert poly.sign_normalized() == 6 * X ** 2 - 4


def test_factored_polynomial():
    factored = FactoredPolynomial(
        factors=((X, 2), (X + 2, 1), (X ** 2 - 2 * X - 6, 1))
    )

    assert factored.degree == 5
    assert factored.render() == 'x^2*(x + 2)*(x^2 - 2*x - 6)'
    assert factored.expand() == X ** 2 * (X + 2) * (X ** 2 - 2 * X - 6)


def test_json_round_trip():
    poly = X ** 40 - 2 ** 70

    assert IntPolynomial.from_json(poly.to_json()) == poly


def test_deflate_mod():
    p = 101
    poly = ((X + 4) ** 2 * (X - 5)).reduce_mod(p)

    assert deflate_mod(poly=poly, factor=(X + 4).coefficients, multiplicity=2, p=p) == (
        (X - 5).reduce_mod(p)
    )

    with pytest.raises(FactorMismatchError):
        deflate_mod(poly=poly, factor=(X + 4).coefficients, multiplicity=3, p=p)


def test_identity_check():
    poly = (X + 1) ** 5

    assert poly_identity_check(
        lhs=poly, rhs=lambda x: (x + 1) ** 5, degree_bound=5
    )
    assert identity_mismatch(
        lhs=poly, rhs=lambda x: (x + 1) ** 5 + (x == 3), degree_bound=5
    ) == (3, 1024, 1025)
