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
Exact and numeric real roots: integers, quadratic surds (a + b*sqrt(d))/2 and
residual-checked numeric roots, plus closed-form quadratic and cubic solvers.
"""

import math

from dataclasses import dataclass
from fractions import Fraction
from typing import Final, TypeAlias, Union

import sympy

from noncommuting.errors import DiscriminantError
from noncommuting.polynomials import IntPolynomial

# Working precision (decimal digits) of the cubic solver
CUBIC_PRECISION: Final[int] = 50

# Relative residual allowed for cubic roots: |f(root)| < this * max(1, |f|_1)
CUBIC_RESIDUAL: Final[float] = 1e-6

# Relative tolerance of the Vieta checks on cubic roots
VIETA_TOLERANCE: Final[float] = 1e-9


def square_free_split(n: int) -> tuple[int, int]:
    """
    Write n > 0 as k^2 * d with d square-free.
    """
    if n <= 0:
        raise ValueError(f'Expected a positive integer, got {n}')

    k: int = 1
    d: int = 1

    for prime, exponent in sympy.factorint(n).items():
        k *= int(prime) ** (exponent // 2)

        if exponent % 2:
            d *= int(prime)

    return k, d


def _render_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else str(value)


@dataclass(frozen=True)
class IntegerRoot:
    value: int

    @property
    def numeric(self) -> float:
        return float(self.value)

    def to_sympy(self) -> sympy.Expr:
        return sympy.Integer(self.value)

    def minimal_polynomial(self) -> IntPolynomial:
        return IntPolynomial.linear(self.value)

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class SurdRoot:
    """
    (a + b*sqrt(d)) / 2 with d > 1 square-free and b != 0.
    """

    a: int
    b: int
    d: int

    def __post_init__(self) -> None:
        if self.b == 0 or self.d <= 1 or square_free_split(self.d)[0] != 1:
            raise ValueError(
                f'Not a quadratic surd: a={self.a}, b={self.b}, d={self.d}'
            )

        if (self.a * self.a - self.b * self.b * self.d) % 4 != 0:
            raise ValueError(
                f'({self.a} + {self.b}*sqrt({self.d}))/2 is not an algebraic'
                f' integer of degree 2'
            )

    @property
    def numeric(self) -> float:
        return (self.a + self.b * math.sqrt(self.d)) / 2

    @property
    def rational_part(self) -> Fraction:
        return Fraction(self.a, 2)

    @property
    def surd_coefficient(self) -> Fraction:
        return Fraction(self.b, 2)

    def conjugate(self) -> 'SurdRoot':
        return SurdRoot(a=self.a, b=-self.b, d=self.d)

    def to_sympy(self) -> sympy.Expr:
        return (self.a + self.b * sympy.sqrt(self.d)) / 2

    def minimal_polynomial(self) -> IntPolynomial:
        """
        x^2 - a x + (a^2 - b^2 d) / 4.
        """
        return IntPolynomial(
            coefficients=(
                (self.a * self.a - self.b * self.b * self.d) // 4, -self.a, 1
            )
        )

    def render(self) -> str:
        """
        Text form 'p+q*sqrt(d)' with exact rational p and q.
        """
        rational: Fraction = self.rational_part
        coefficient: Fraction = self.surd_coefficient

        if abs(coefficient) == 1:
            surd: str = f'sqrt({self.d})'

        else:
            surd = f'{_render_fraction(abs(coefficient))}*sqrt({self.d})'

        sign: str = '-' if coefficient < 0 else '+'

        if rational == 0:
            return surd if sign == '+' else f'-{surd}'

        return f'{_render_fraction(rational)}{sign}{surd}'


@dataclass(frozen=True)
class NumericRoot:
    """
    Root known numerically only; error is an absolute bound.
    """

    value: float
    error: float

    @property
    def numeric(self) -> float:
        return self.value

    def render(self) -> str:
        return f'{self.value:.10f}'


ExactRoot: TypeAlias = Union[IntegerRoot, SurdRoot, NumericRoot]


def solve_quadratic(a1: int, a0: int) -> tuple[ExactRoot, ExactRoot]:
    """
    Roots of x^2 + a1 x + a0, the larger first. Both are integers when the
    discriminant is a perfect square.
    """
    discriminant: int = a1 * a1 - 4 * a0

    if discriminant < 0:
        raise ValueError(
            f'x^2 + {a1}x + {a0} has no real roots (discriminant'
            f' {discriminant})'
        )

    root: int = math.isqrt(discriminant)

    if root * root == discriminant:
        # a1^2 - 4 a0 and a1 have the same parity, so both roots are integral.
        return (
            IntegerRoot(value=(-a1 + root) // 2),
            IntegerRoot(value=(-a1 - root) // 2)
        )

    k, d = square_free_split(discriminant)

    return SurdRoot(a=-a1, b=k, d=d), SurdRoot(a=-a1, b=-k, d=d)


@dataclass(frozen=True)
class CubicCoefficients:
    """
    Monic cubic x^3 + b x^2 + c x + d with its depressed form y^3 + alpha y +
    beta under x = y - b/3.
    """

    b: int
    c: int
    d: int

    @property
    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(coefficients=(self.d, self.c, self.b, 1))

    @property
    def alpha(self) -> Fraction:
        return self.c - Fraction(self.b * self.b, 3)

    @property
    def beta(self) -> Fraction:
        return (
            Fraction(2 * self.b ** 3, 27) - Fraction(self.b * self.c, 3) + self.d
        )

    @property
    def discriminant(self) -> Fraction:
        """
        (alpha/3)^3 + (beta/2)^2; negative iff three distinct real roots.
        """
        return (self.alpha / 3) ** 3 + (self.beta / 2) ** 2

    @property
    def printed_alpha(self) -> Fraction:
        """
        (b^2 - 2b)/3 + c, the coefficient in the stated closed-form
        energy.
        """
        return Fraction(self.b * self.b - 2 * self.b, 3) + self.c

    @property
    def printed_beta(self) -> Fraction:
        return (
            Fraction(-self.b ** 3 + 3 * self.b ** 2 - 9 * self.b * self.c, 27)
            + self.d
        )

    def printed_forms_agree(self) -> bool:
        return (self.printed_alpha, self.printed_beta) == (self.alpha, self.beta)


def solve_cubic(coefficients: CubicCoefficients) -> tuple[NumericRoot, ...]:
    """
    Three real roots of a cubic with negative discriminant, largest first, by
    the trigonometric method followed by a Newton step at high precision.
    """
    discriminant: Fraction = coefficients.discriminant

    if discriminant >= 0:
        raise DiscriminantError(
            f'Cubic {coefficients.polynomial.render()} has discriminant'
            f' {discriminant} >= 0, expected three distinct real roots'
        )

    polynomial: IntPolynomial = coefficients.polynomial
    derivative: IntPolynomial = polynomial.derivative()
    scale: float = max(1.0, float(sum(abs(c) for c in polynomial.coefficients)))

    alpha: sympy.Rational = sympy.Rational(
        coefficients.alpha.numerator, coefficients.alpha.denominator
    )
    beta: sympy.Rational = sympy.Rational(
        coefficients.beta.numerator, coefficients.beta.denominator
    )
    shift: sympy.Rational = sympy.Rational(coefficients.b, 3)

    radius: sympy.Expr = 2 * sympy.sqrt(-alpha / 3)
    angle: sympy.Expr = sympy.acos(
        3 * beta / (2 * alpha) * sympy.sqrt(-3 / alpha)
    ) / 3

    roots: list[NumericRoot] = []

    for k in range(3):
        start: sympy.Expr = radius * sympy.cos(angle - 2 * sympy.pi * k / 3) - shift
        x: sympy.Float = sympy.re(start.evalf(CUBIC_PRECISION))
        x = (x - polynomial(x) / derivative(x)).evalf(CUBIC_PRECISION)

        residual: sympy.Float = abs(polynomial(x)).evalf(CUBIC_PRECISION)

        if residual >= CUBIC_RESIDUAL * scale:
            raise ArithmeticError(
                f'Cubic root {x} of {polynomial.render()} has residual'
                f' {residual}'
            )

        # Newton bound on the distance to the true root, plus rounding.
        error: sympy.Float = residual / abs(derivative(x)) + abs(
            sympy.Float(float(x), CUBIC_PRECISION) - x
        )

        roots.append(NumericRoot(value=float(x), error=float(error)))

    roots.sort(key=lambda root: root.value, reverse=True)

    _check_vieta(coefficients=coefficients, roots=roots)

    return tuple(roots)


def _check_vieta(
    coefficients: CubicCoefficients, roots: list[NumericRoot]
) -> None:
    g1, g2, g3 = (root.value for root in roots)

    for name, value, expected in (
        ('sum', g1 + g2 + g3, -coefficients.b),
        ('pair sum', g1 * g2 + g2 * g3 + g1 * g3, coefficients.c),
        ('product', g1 * g2 * g3, -coefficients.d)
    ):
        if not math.isclose(
            value, expected, rel_tol=VIETA_TOLERANCE, abs_tol=VIETA_TOLERANCE
        ):
            raise ArithmeticError(
                f'Vieta {name} of cubic roots is {value}, expected {expected}'
            )
