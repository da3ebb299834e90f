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
Finite fields GF(p^k). Elements are encoded as integers 0..q-1 whose base-p
digits are the coefficients of the residue polynomial, lowest degree first.
Addition and multiplication are tabulated once per field.
"""

from dataclasses import dataclass
from typing import Final, Optional, Self

import numpy as np
import sympy

from noncommuting.errors import GroupSpecError

# Irreducible polynomials over GF(p), coefficients from the constant term up,
# keyed by field order.
IRREDUCIBLE_POLYNOMIALS: Final[dict[int, tuple[int, ...]]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 0, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1)
}


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """
    Split q into (p, k) with q = p^k, p prime. None if q is not a prime power.
    """
    if q < 2:
        return None

    factors: dict[int, int] = sympy.factorint(q)

    if len(factors) != 1:
        return None

    ((p, k),) = factors.items()

    return int(p), int(k)


def _is_irreducible(coefficients: tuple[int, ...], p: int) -> bool:
    """
    Irreducibility over GF(p) with sympy, coefficients from the constant term.
    """
    x: sympy.Symbol = sympy.Symbol('x')

    polynomial: sympy.Poly = sympy.Poly(
        list(reversed(coefficients)), x, modulus=p
    )

    return bool(polynomial.is_irreducible)


class GaloisField:
    """
    The field with p^k elements as GF(p)[t] modulo an irreducible polynomial
    of degree k.
    """

    def __init__(
        self, p: int, k: int = 1,
        modulus: Optional[tuple[int, ...]] = None
    ) -> None:
        if not sympy.isprime(p):
            raise GroupSpecError(f'Field characteristic {p} is not prime')

        if k < 1:
            raise GroupSpecError(f'Extension degree must be >= 1, got {k}')

        self.p: int = p
        self.k: int = k
        self.order: int = p ** k
        self.modulus: tuple[int, ...] = self._checked_modulus(modulus=modulus)

        self.add_table: np.ndarray = np.zeros(
            (self.order, self.order), dtype=np.int64
        )
        self.mul_table: np.ndarray = np.zeros(
            (self.order, self.order), dtype=np.int64
        )

        for a in range(self.order):
            for b in range(self.order):
                self.add_table[a, b] = self._encode(
                    [
                        (x + y) % p for x, y in zip(
                            self._decode(a), self._decode(b)
                        )
                    ]
                )
                self.mul_table[a, b] = self._encode(
                    self._reduce(
                        self._multiply_digits(self._decode(a), self._decode(b))
                    )
                )

        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)

        # Additive and multiplicative inverses, -1 marks 0 having none.
        self.negation: np.ndarray = np.argmin(self.add_table, axis=1)
        self.inversion: np.ndarray = np.full(self.order, -1, dtype=np.int64)

        for a in range(1, self.order):
            self.inversion[a] = int(np.flatnonzero(self.mul_table[a] == 1)[0])

    def _checked_modulus(
        self, modulus: Optional[tuple[int, ...]]
    ) -> tuple[int, ...]:
        """
        Resolve the reduction polynomial: x for prime fields, built-in table
        or a user supplied irreducible polynomial otherwise. The result is
        monic.
        """
        if self.k == 1:
            return 0, 1

        if modulus is None:
            if self.order not in IRREDUCIBLE_POLYNOMIALS:
                raise GroupSpecError(
                    f'No built-in irreducible polynomial for GF({self.order}),'
                    f' supply one explicitly'
                )

            return IRREDUCIBLE_POLYNOMIALS[self.order]

        reduced: list[int] = [c % self.p for c in modulus]

        while reduced and reduced[-1] == 0:
            reduced.pop()

        if len(reduced) - 1 != self.k:
            raise GroupSpecError(
                f'Irreducible polynomial for GF({self.order}) must have degree'
                f' {self.k}, got {len(reduced) - 1}'
            )

        leading_inverse: int = pow(reduced[-1], -1, self.p)
        monic: tuple[int, ...] = tuple(
            c * leading_inverse % self.p for c in reduced
        )

        if not _is_irreducible(coefficients=monic, p=self.p):
            raise GroupSpecError(
                f'Polynomial {modulus} is reducible over GF({self.p})'
            )

        return monic

    def _decode(self, value: int) -> list[int]:
        digits: list[int] = []

        for _ in range(self.k):
            value, digit = divmod(value, self.p)
            digits.append(digit)

        return digits

    def _encode(self, digits: list[int]) -> int:
        value: int = 0

        for digit in reversed(digits):
            value = value * self.p + digit

        return value

    def _multiply_digits(self, a: list[int], b: list[int]) -> list[int]:
        product: list[int] = [0] * (len(a) + len(b) - 1)

        for i, x in enumerate(a):
            for j, y in enumerate(b):
                product[i + j] = (product[i + j] + x * y) % self.p

        return product

    def _reduce(self, digits: list[int]) -> list[int]:
        """
        Remainder modulo the (monic) field polynomial.
        """
        digits = list(digits)

        for top in range(len(digits) - 1, self.k - 1, -1):
            factor: int = digits[top]

            if factor == 0:
                continue

            for i, c in enumerate(self.modulus):
                position: int = top - self.k + i
                digits[position] = (digits[position] - factor * c) % self.p

        return (digits + [0] * self.k)[:self.k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaloisField):
            return NotImplemented

        return (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f'GaloisField(p={self.p}, k={self.k}, modulus={self.modulus})'

    def element(self, value: int) -> 'FieldElement':
        return FieldElement(field=self, value=value % self.order)

    def from_coordinates(self, coordinates: tuple[int, ...]) -> 'FieldElement':
        return self.element(
            self._encode([c % self.p for c in coordinates][:self.k])
        )

    def elements(self) -> list['FieldElement']:
        return [self.element(value) for value in range(self.order)]

    def coordinates(self, value: int) -> tuple[int, ...]:
        return tuple(self._decode(value))


@dataclass(frozen=True)
class FieldElement:
    """
    Element of GaloisField, arithmetic goes through the field tables.
    """

    field: GaloisField
    value: int

    @property
    def coordinates(self) -> tuple[int, ...]:
        return self.field.coordinates(self.value)

    def _check(self, other: Self) -> None:
        if other.field != self.field:
            raise ValueError('Elements belong to different fields')

    def __add__(self, other: Self) -> Self:
        self._check(other)

        return FieldElement(
            field=self.field,
            value=int(self.field.add_table[self.value, other.value])
        )

    def __neg__(self) -> Self:
        return FieldElement(
            field=self.field, value=int(self.field.negation[self.value])
        )

    def __sub__(self, other: Self) -> Self:
        return self + (-other)

    def __mul__(self, other: Self) -> Self:
        self._check(other)

        return FieldElement(
            field=self.field,
            value=int(self.field.mul_table[self.value, other.value])
        )

    def inverse(self) -> Self:
        if self.value == 0:
            raise ZeroDivisionError('Zero has no multiplicative inverse')

        return FieldElement(
            field=self.field, value=int(self.field.inversion[self.value])
        )

    def __truediv__(self, other: Self) -> Self:
        return self * other.inverse()

    def __pow__(self, exponent: int) -> Self:
        if exponent < 0:
            return self.inverse() ** (-exponent)

        result: FieldElement = self.field.element(1)
        base: FieldElement = self

        while exponent:
            if exponent & 1:
                result = result * base

            base = base * base
            exponent >>= 1

        return result

    def multiplicative_order(self) -> int:
        if self.value == 0:
            raise ZeroDivisionError('Zero has no multiplicative order')

        power: FieldElement = self
        order: int = 1

        while power.value != 1:
            power = power * self
            order += 1

        return order
