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

import math

from fractions import Fraction

import pytest

from noncommuting.errors import DiscriminantError
from noncommuting.polynomials import IntPolynomial
from noncommuting.roots import (
    CubicCoefficients,
    IntegerRoot,
    NumericRoot,
    SurdRoot,
    solve_cubic,
    solve_quadratic,
    square_free_split
)


@pytest.mark.parametrize(
    'n, expected', [(1, (1, 1)), (7, (1, 7)), (28, (2, 7)), (72, (6, 2)), (225, (15, 1))]
)
def test_square_free_split(n, expected):
    assert square_free_split(n) == expected


def test_square_free_split_needs_positive():
    with pytest.raises(ValueError):
        square_free_split(0)


def test_quadratic_with_surd_roots():
    large, small = solve_quadratic(a1=-2, a0=-6)

    assert large == SurdRoot(a=2, b=2, d=7)
    assert small == large.conjugate()
    assert large.render() == '1+sqrt(7)'
    assert small.render() == '1-sqrt(7)'
    assert math.isclose(large.numeric, 1 + math.sqrt(7))


def test_quadratic_with_integer_roots():
    assert solve_quadratic(a1=-2, a0=-8) == (IntegerRoot(value=4), IntegerRoot(value=-2))


def test_quadratic_without_real_roots():
    with pytest.raises(ValueError):
        solve_quadratic(a1=0, a0=1)


def test_half_integer_surd():
    golden = SurdRoot(a=1, b=1, d=5)

    assert golden.render() == '1/2+1/2*sqrt(5)'
    assert golden.minimal_polynomial() == IntPolynomial(coefficients=(-1, -1, 1))
    assert golden.rational_part == Fraction(1, 2)


@pytest.mark.parametrize(
    'surd, text',
    [
        (SurdRoot(a=4, b=4, d=6), '2+2*sqrt(6)'),
        (SurdRoot(a=0, b=-2, d=3), '-sqrt(3)'),
        (SurdRoot(a=6, b=-4, d=57), '3-2*sqrt(57)')
    ]
)
def test_surd_render(surd, text):
    assert surd.render() == text


@pytest.mark.parametrize('a, b, d', [(1, 1, 4), (1, 1, 2), (1, 0, 5), (1, 1, 1)])
def test_invalid_surd(a, b, d):
    with pytest.raises(ValueError):
        SurdRoot(a=a, b=b, d=d)


def test_surd_minimal_polynomial_vanishes():
    root = SurdRoot(a=4, b=4, d=6)

    assert root.minimal_polynomial() == IntPolynomial.from_high([1, -4, -20])
    assert abs(root.minimal_polynomial()(root.numeric)) < 1e-9


def test_gl2_cubic_roots():
    # GL(2,3) cubic factor x^3 - 34x^2 - 312x - 576
    cubic = CubicCoefficients(b=-34, c=-312, d=-576)
    roots = solve_cubic(cubic)

    assert len(roots) == 3
    assert all(isinstance(root, NumericRoot) for root in roots)
    assert roots[0].value > roots[1].value > roots[2].value
    assert math.isclose(sum(root.value for root in roots), 34, rel_tol=1e-12)

    for root in roots:
        assert abs(cubic.polynomial(root.value)) < 1e-6 * 576
        assert root.error < 1e-9


def test_depressed_cubic():
    cubic = CubicCoefficients(b=-34, c=-312, d=-576)

    assert cubic.alpha == Fraction(-2092, 3)
    assert cubic.discriminant < 0
    assert not cubic.printed_forms_agree()


def test_printed_forms_agree_without_quadratic_term():
    cubic = CubicCoefficients(b=0, c=-7, d=6)

    assert cubic.printed_forms_agree()
    assert [round(root.value) for root in solve_cubic(cubic)] == [2, 1, -3]


def test_cubic_with_one_real_root_is_rejected():
    with pytest.raises(DiscriminantError):
        solve_cubic(CubicCoefficients(b=0, c=1, d=1))


def test_numeric_root_render():
    assert NumericRoot(value=1.5, error=0.0).render() == '1.5000000000'
