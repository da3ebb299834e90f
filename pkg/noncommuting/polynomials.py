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
Dense polynomials with arbitrary-precision integer coefficients, exact
deflation, square-free decomposition and reduction modulo primes.
"""

import math

from dataclasses import dataclass
from typing import Any, Callable, Final, Iterable, Optional, Self, Union

import sympy

from noncommuting.errors import FactorMismatchError

# Symbol used when parsing and rendering
VARIABLE: Final[str] = 'x'

# First sample point of polynomial identity checks
IDENTITY_SAMPLE_START: Final[int] = 1


def _strip(coefficients: Iterable[int]) -> tuple[int, ...]:
    result: list[int] = [int(c) for c in coefficients]

    while result and result[-1] == 0:
        result.pop()

    return tuple(result)


@dataclass(frozen=True)
class IntPolynomial:
    """
    Integer polynomial, coefficients[k] belongs to x^k. The zero polynomial
    has no coefficients and degree -1.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, 'coefficients', _strip(self.coefficients))

    @classmethod
    def constant(cls, value: int) -> Self:
        return cls(coefficients=(value,))

    @classmethod
    def x(cls) -> Self:
        return cls(coefficients=(0, 1))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> Self:
        return cls(coefficients=(0,) * degree + (coefficient,))

    @classmethod
    def linear(cls, root: int) -> Self:
        """
        x - root.
        """
        return cls(coefficients=(-root, 1))

    @classmethod
    def from_high(cls, coefficients: Iterable[int]) -> Self:
        """
        Build from coefficients listed from the leading one down.
        """
        return cls(coefficients=tuple(reversed(list(coefficients))))

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        Parse a polynomial expression in x, e.g. '(-x)^3*(-x+4)*(-x-2)^2'.
        """
        symbol: sympy.Symbol = sympy.Symbol(VARIABLE)

        try:
            expression: sympy.Expr = sympy.sympify(
                text.replace('^', '**'), locals={VARIABLE: symbol}
            )
            polynomial: sympy.Poly = sympy.Poly(expression, symbol)

        except (sympy.SympifyError, sympy.PolynomialError) as e:
            raise ValueError(f'Cannot parse polynomial {text!r}: {e}') from e

        coefficients: list[Any] = list(reversed(polynomial.all_coeffs()))

        if not all(c.is_integer for c in coefficients):
            raise ValueError(f'Polynomial {text!r} has non-integer coefficients')

        return cls(coefficients=tuple(int(c) for c in coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def valuation(self) -> int:
        """
        Multiplicity of the root 0.
        """
        for k, c in enumerate(self.coefficients):
            if c != 0:
                return k

        raise ValueError('Zero polynomial has no valuation')

    def __add__(self, other: Union[Self, int]) -> Self:
        other = _coerce(other)
        size: int = max(len(self.coefficients), len(other.coefficients))

        return IntPolynomial(
            coefficients=tuple(
                self.coefficient(k) + other.coefficient(k) for k in range(size)
            )
        )

    __radd__ = __add__

    def __neg__(self) -> Self:
        return IntPolynomial(coefficients=tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union[Self, int]) -> Self:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> Self:
        return _coerce(other) - self

    def __mul__(self, other: Union[Self, int]) -> Self:
        other = _coerce(other)

        if self.is_zero() or other.is_zero():
            return IntPolynomial()

        product: list[int] = [0] * (self.degree + other.degree + 1)

        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue

            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b

        return IntPolynomial(coefficients=tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Self:
        if exponent < 0:
            raise ValueError('Negative powers are not polynomials')

        result: IntPolynomial = IntPolynomial.constant(1)
        base: IntPolynomial = self

        while exponent:
            if exponent & 1:
                result = result * base

            base = base * base
            exponent >>= 1

        return result

    def __divmod__(self, divisor: Self) -> tuple[Self, Self]:
        """
        Long division over the integers. Stops as soon as a leading
        coefficient is not divisible, so a zero remainder means the quotient
        is exact and integral.
        """
        if divisor.is_zero():
            raise ZeroDivisionError('Polynomial division by zero')

        remainder: list[int] = list(self.coefficients)
        quotient: list[int] = [0] * max(self.degree - divisor.degree + 1, 0)
        lead: int = divisor.leading

        while len(remainder) - 1 >= divisor.degree and remainder:
            shift: int = len(remainder) - 1 - divisor.degree
            factor, rest = divmod(remainder[-1], lead)

            if rest != 0:
                break

            quotient[shift] = factor

            for k, c in enumerate(divisor.coefficients):
                remainder[shift + k] -= factor * c

            while remainder and remainder[-1] == 0:
                remainder.pop()

        return IntPolynomial(tuple(quotient)), IntPolynomial(tuple(remainder))

    def __floordiv__(self, divisor: Self) -> Self:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: Self) -> Self:
        return divmod(self, divisor)[1]

    def __call__(self, x: Any) -> Any:
        """
        Horner evaluation; works for int, Fraction, float and sympy numbers.
        """
        result: Any = 0

        for c in reversed(self.coefficients):
            result = result * x + c

        return result

    def derivative(self) -> Self:
        return IntPolynomial(
            coefficients=tuple(
                k * c for k, c in enumerate(self.coefficients) if k > 0
            )
        )

    def content(self) -> int:
        return math.gcd(*self.coefficients) if self.coefficients else 0

    def primitive_part(self) -> Self:
        """
        Divide by the content and make the leading coefficient positive.
        """
        if self.is_zero():
            return self

        divisor: int = self.content() * (1 if self.leading > 0 else -1)

        return IntPolynomial(
            coefficients=tuple(c // divisor for c in self.coefficients)
        )

    def sign_normalized(self) -> Self:
        """
        Multiply by -1 if needed so the leading coefficient is positive. Turns
        det(A - xI) forms into det(xI - A).
        """
        return -self if self.leading < 0 else self

    def scale_roots(self, factor: int) -> Self:
        """
        Polynomial whose roots are factor times the roots of self, with the
        same leading coefficient: factor^d P(x / factor).
        """
        return IntPolynomial(
            coefficients=tuple(
                c * factor ** (self.degree - k)
                for k, c in enumerate(self.coefficients)
            )
        )

    def reduce_mod(self, p: int) -> tuple[int, ...]:
        return _strip(c % p for c in self.coefficients)

    def render(self) -> str:
        """
        Text form 'c_k*x^k + ... + c_0' with exact integers.
        """
        if self.is_zero():
            return '0'

        terms: list[str] = []

        for k in range(self.degree, -1, -1):
            c: int = self.coefficients[k]

            if c == 0:
                continue

            magnitude: int = abs(c)

            if k == 0:
                body: str = str(magnitude)

            else:
                power: str = VARIABLE if k == 1 else f'{VARIABLE}^{k}'
                body = power if magnitude == 1 else f'{magnitude}*{power}'

            if not terms:
                terms.append(f'-{body}' if c < 0 else body)

            else:
                terms.append(f'- {body}' if c < 0 else f'+ {body}')

        return ' '.join(terms)

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict[str, Any]:
        return {
            'degree': self.degree,
            'coefficients': [str(c) for c in self.coefficients]
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        return cls(coefficients=tuple(int(c) for c in data['coefficients']))


def _coerce(value: Union[IntPolynomial, int]) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value

    return IntPolynomial.constant(int(value))


@dataclass(frozen=True)
class FactoredPolynomial:
    """
    unit * product of factor^exponent, kept unexpanded for display.
    """

    factors: tuple[tuple[IntPolynomial, int], ...]
    unit: int = 1

    @property
    def degree(self) -> int:
        return sum(factor.degree * exponent for factor, exponent in self.factors)

    def expand(self) -> IntPolynomial:
        result: IntPolynomial = IntPolynomial.constant(self.unit)

        for factor, exponent in self.factors:
            result = result * factor ** exponent

        return result

    def render(self) -> str:
        parts: list[str] = [] if self.unit == 1 else [str(self.unit)]

        for factor, exponent in self.factors:
            if exponent == 0:
                continue

            text: str = factor.render()

            if sum(1 for c in factor.coefficients if c != 0) > 1:
                text = f'({text})'

            parts.append(text if exponent == 1 else f'{text}^{exponent}')

        return '*'.join(parts) if parts else '1'

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict[str, Any]:
        return {
            'unit': str(self.unit),
            'factors': [
                {'factor': factor.to_json(), 'exponent': exponent}
                for factor, exponent in self.factors
            ]
        }


def deflate(
    poly: IntPolynomial, factor: IntPolynomial, multiplicity: int = 1
) -> IntPolynomial:
    """
    Exact quotient poly / factor^multiplicity. A non-zero remainder raises
    FactorMismatchError carrying that remainder.
    """
    quotient: IntPolynomial = poly

    for step in range(multiplicity):
        quotient, remainder = divmod(quotient, factor)

        if not remainder.is_zero():
            raise FactorMismatchError(
                f'Factor {factor.render()} does not divide the polynomial'
                f' {multiplicity} times (failed at power {step + 1})',
                remainder=remainder
            )

    return quotient


def multiplicity_of(poly: IntPolynomial, factor: IntPolynomial) -> int:
    """
    Largest m with factor^m dividing poly.
    """
    if poly.is_zero():
        raise ValueError('Zero polynomial is divisible by everything')

    count: int = 0

    while True:
        quotient, remainder = divmod(poly, factor)

        if not remainder.is_zero():
            return count

        poly = quotient
        count += 1


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    remainder: IntPolynomial = a

    while not remainder.is_zero() and remainder.degree >= b.degree:
        remainder = (
            b.leading * remainder
            - IntPolynomial.monomial(
                degree=remainder.degree - b.degree,
                coefficient=remainder.leading
            ) * b
        )

    return remainder


def gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """
    Primitive greatest common divisor (content dropped, leading coefficient
    positive), by the primitive remainder sequence.
    """
    a, b = a.primitive_part(), b.primitive_part()

    while not b.is_zero():
        a, b = b, pseudo_remainder(a, b).primitive_part()

    return a


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return deflate(poly=a, factor=b, multiplicity=1)


def square_free_decomposition(
    poly: IntPolynomial
) -> list[tuple[IntPolynomial, int]]:
    """
    Yun's algorithm: primitive square-free factors s_i with poly equal to
    content * prod s_i^i up to sign. Constant factors are skipped.
    """
    a: IntPolynomial = poly.primitive_part()

    if a.degree < 1:
        return []

    b: IntPolynomial = a.derivative()
    c: IntPolynomial = gcd(a, b)
    w: IntPolynomial = exact_quotient(a, c)
    y: IntPolynomial = exact_quotient(b, c)
    z: IntPolynomial = y - w.derivative()

    result: list[tuple[IntPolynomial, int]] = []
    multiplicity: int = 1

    while w.degree > 0:
        g: IntPolynomial = gcd(w, z)

        if g.degree > 0:
            result.append((g, multiplicity))

        w = exact_quotient(w, g)
        y = exact_quotient(z, g)
        z = y - w.derivative()
        multiplicity += 1

    return result


def divmod_mod(
    a: tuple[int, ...], b: tuple[int, ...], p: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Division over GF(p); b must have a leading coefficient invertible mod p.
    """
    b = _strip(c % p for c in b)

    if not b:
        raise ZeroDivisionError('Polynomial division by zero mod p')

    remainder: list[int] = [c % p for c in a]
    inverse: int = pow(b[-1], -1, p)
    degree: int = len(b) - 1
    quotient: list[int] = [0] * max(len(remainder) - degree, 0)

    for shift in range(len(remainder) - 1 - degree, -1, -1):
        factor: int = remainder[shift + degree] * inverse % p

        if factor == 0:
            continue

        quotient[shift] = factor

        for k, c in enumerate(b):
            remainder[shift + k] = (remainder[shift + k] - factor * c) % p

    return _strip(quotient), _strip(remainder[:degree])


def deflate_mod(
    poly: tuple[int, ...], factor: tuple[int, ...], multiplicity: int, p: int
) -> tuple[int, ...]:
    """
    deflate over GF(p); raises FactorMismatchError with the remainder mod p.
    """
    quotient: tuple[int, ...] = tuple(c % p for c in poly)

    for step in range(multiplicity):
        quotient, remainder = divmod_mod(a=quotient, b=factor, p=p)

        if remainder:
            raise FactorMismatchError(
                f'Factor does not divide the polynomial mod {p} (failed at'
                f' power {step + 1} of {multiplicity})',
                remainder=remainder
            )

    return quotient


def identity_mismatch(
    lhs: Callable[[int], Any], rhs: Callable[[int], Any], degree_bound: int,
    start: int = IDENTITY_SAMPLE_START, skip: frozenset[int] = frozenset({0})
) -> Optional[tuple[int, Any, Any]]:
    """
    First sample point where two polynomial evaluators differ, None if they
    agree on degree_bound + 1 distinct integers (which proves equality).
    """
    x: int = start
    agreed: int = 0

    while agreed < degree_bound + 1:
        if x not in skip:
            left: Any = lhs(x)
            right: Any = rhs(x)

            if left != right:
                return x, left, right

            agreed += 1

        x += 1

    return None


def poly_identity_check(
    lhs: Callable[[int], Any], rhs: Callable[[int], Any], degree_bound: int,
    start: int = IDENTITY_SAMPLE_START
) -> bool:
    return identity_mismatch(
        lhs=lhs, rhs=rhs, degree_bound=degree_bound, start=start
    ) is None
