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
Finite groups on element indices 0..order-1.

Every group is defined by a vectorised product function on index arrays.
Groups up to DENSE_TABLE_LIMIT elements also materialise their Cayley table;
larger ones (big products, GL(2,q) for q >= 7) multiply through the formula.
"""

import itertools
import math

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Final, Optional, TypeAlias, Union

import numpy as np

from noncommuting.config import (
    DEFAULT_VERTEX_CAP,
    EXHAUSTIVE_AXIOM_ORDER,
    SAMPLED_TRIPLES
)
from noncommuting.errors import GroupAxiomError, GroupSpecError, VertexCapError
from noncommuting.fields import GaloisField, prime_power

# Groups up to this order keep a dense Cayley table
DENSE_TABLE_LIMIT: Final[int] = 1024

# Rows per block while building commutation matrices without a table
COMMUTATION_CHUNK: Final[int] = 256

# Largest supported symmetric group degree
MAX_SYMMETRIC_DEGREE: Final[int] = 6

Product: TypeAlias = Callable[[np.ndarray, np.ndarray], np.ndarray]


class FiniteGroup:
    """
    Immutable finite group: a product on element indices, an identity index
    and human-readable element labels.
    """

    def __init__(
        self, label: str, order: int, identity: int, product: Product,
        element_labels: Callable[[int], str],
        factors: tuple['FiniteGroup', ...] = ()
    ) -> None:
        self.label: str = label
        self.order: int = order
        self.identity: int = identity
        self.factors: tuple[FiniteGroup, ...] = factors

        self._product: Product = product
        self._element_labels: Callable[[int], str] = element_labels
        self._table: Optional[np.ndarray] = None

        if order <= DENSE_TABLE_LIMIT:
            indices: np.ndarray = np.arange(order)

            self._table = product(indices[:, None], indices[None, :])
            self._table.setflags(write=False)

    def __repr__(self) -> str:
        return f'FiniteGroup({self.label}, order={self.order})'

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def table(self) -> Optional[np.ndarray]:
        return self._table

    def multiply_many(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """
        Elementwise (broadcasting) product of two index arrays.
        """
        if self._table is not None:
            return self._table[xs, ys]

        return self._product(np.asarray(xs), np.asarray(ys))

    def multiply(self, x: int, y: int) -> int:
        return int(self.multiply_many(np.array(x), np.array(y)))

    @cached_property
    def inverses(self) -> np.ndarray:
        result: np.ndarray = np.full(self.order, -1, dtype=np.int64)
        indices: np.ndarray = np.arange(self.order)

        for x in indices:
            products: np.ndarray = self.multiply_many(
                np.full(self.order, x), indices
            )
            result[x] = int(np.flatnonzero(products == self.identity)[0])

        result.setflags(write=False)

        return result

    def inverse(self, x: int) -> int:
        return int(self.inverses[x])

    @cached_property
    def commutation_matrix(self) -> np.ndarray:
        """
        Boolean matrix, entry (x, y) is True iff xy = yx.
        """
        if self.factors:
            left, right = self.factors
            commute: np.ndarray = np.logical_and(
                left.commutation_matrix[:, None, :, None],
                right.commutation_matrix[None, :, None, :]
            ).reshape(self.order, self.order)

        elif self._table is not None:
            commute = self._table == self._table.T

        else:
            commute = np.zeros((self.order, self.order), dtype=bool)
            indices: np.ndarray = np.arange(self.order)

            for start in range(0, self.order, COMMUTATION_CHUNK):
                rows: np.ndarray = indices[start:start + COMMUTATION_CHUNK]
                commute[start:start + len(rows)] = (
                    self.multiply_many(rows[:, None], indices[None, :])
                    == self.multiply_many(indices[None, :], rows[:, None])
                )

        commute.setflags(write=False)

        return commute

    def is_abelian(self) -> bool:
        return bool(self.commutation_matrix.all())

    def element_label(self, x: int) -> str:
        if not 0 <= x < self.order:
            raise IndexError(f'Element {x} is outside {self.label}')

        return self._element_labels(x)


def center(g: FiniteGroup) -> frozenset[int]:
    """
    Elements commuting with every element of g.
    """
    return frozenset(
        int(x) for x in np.flatnonzero(g.commutation_matrix.all(axis=1))
    )


def centralizer(g: FiniteGroup, x: int) -> frozenset[int]:
    if not 0 <= x < g.order:
        raise IndexError(f'Element {x} is outside {g.label}')

    return frozenset(int(y) for y in np.flatnonzero(g.commutation_matrix[x]))


def validate_group(g: FiniteGroup, seed: int = 0) -> None:
    """
    Check associativity (exhaustive up to EXHAUSTIVE_AXIOM_ORDER, sampled
    above), the two-sided identity and two-sided inverses.
    """
    indices: np.ndarray = np.arange(g.order)

    if g.order <= EXHAUSTIVE_AXIOM_ORDER:
        x, y, z = np.meshgrid(indices, indices, indices, indexing='ij')

    else:
        rng: np.random.Generator = np.random.default_rng(seed)
        x, y, z = rng.integers(0, g.order, size=(3, SAMPLED_TRIPLES))

    if not np.array_equal(
        g.multiply_many(g.multiply_many(x, y), z),
        g.multiply_many(x, g.multiply_many(y, z))
    ):
        raise GroupAxiomError(f'{g.label}: multiplication is not associative')

    identity: np.ndarray = np.full(g.order, g.identity)

    if not (
        np.array_equal(g.multiply_many(identity, indices), indices)
        and np.array_equal(g.multiply_many(indices, identity), indices)
    ):
        raise GroupAxiomError(f'{g.label}: identity is not two-sided')

    inverses: np.ndarray = g.inverses

    if not (
        np.array_equal(g.multiply_many(indices, inverses), identity)
        and np.array_equal(g.multiply_many(inverses, indices), identity)
    ):
        raise GroupAxiomError(f'{g.label}: some element has no inverse')


def _power_label(base: str, exponent: int) -> str:
    if exponent == 0:
        return 'e'

    if exponent == 1:
        return base

    return f'{base}^{exponent}'


def make_dihedral(n: int) -> FiniteGroup:
    """
    Dihedral group of order 2n, elements s^a r^i.

    Index order: identity, r^(n/2) for even n, the other rotations r..r^(n-1),
    then reflections. For even n reflections come in commuting pairs
    (s r^i, s r^(i+n/2)), so the non-central elements follow the block layout
    of the adjacency matrix of the non-commuting graph.
    """
    if n < 3:
        raise GroupSpecError(
            f'Dihedral group needs n >= 3, got {n} (D4 and below are abelian)'
        )

    half: Optional[int] = n // 2 if n % 2 == 0 else None

    rotations: list[tuple[int, int]] = [(0, 0)]

    if half is not None:
        rotations.append((0, half))

    rotations += [(0, i) for i in range(1, n) if i != half]

    if half is not None:
        reflections: list[tuple[int, int]] = [
            (1, j) for i in range(half) for j in (i, i + half)
        ]

    else:
        reflections = [(1, i) for i in range(n)]

    elements: list[tuple[int, int]] = rotations + reflections

    flags: np.ndarray = np.array([flag for flag, _ in elements])
    exponents: np.ndarray = np.array([exponent for _, exponent in elements])

    index_of_code: np.ndarray = np.empty(2 * n, dtype=np.int64)
    index_of_code[flags * n + exponents] = np.arange(2 * n)

    def product(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        # s^a r^i * s^b r^j = s^(a+b) r^((-1)^b i + j)
        flag: np.ndarray = (flags[xs] + flags[ys]) % 2
        exponent: np.ndarray = (
            np.where(flags[ys] == 1, -exponents[xs], exponents[xs])
            + exponents[ys]
        ) % n

        return index_of_code[flag * n + exponent]

    def element_labels(x: int) -> str:
        flag, exponent = elements[x]

        if flag == 0:
            return _power_label(base='r', exponent=exponent)

        return 's' if exponent == 0 else f's*{_power_label("r", exponent)}'

    return FiniteGroup(
        label=f'dihedral:{n}', order=2 * n, identity=0, product=product,
        element_labels=element_labels
    )


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f'Cyclic group needs n >= 1, got {n}')

    def product(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return (np.asarray(xs) + np.asarray(ys)) % n

    return FiniteGroup(
        label=f'cyclic:{n}', order=n, identity=0, product=product,
        element_labels=lambda x: _power_label(base='a', exponent=x)
    )


def make_symmetric(k: int) -> FiniteGroup:
    """
    Symmetric group on k points, permutations in lexicographic order (the
    identity first), multiplied as composition: (xy)(i) = x(y(i)).
    """
    if not 2 <= k <= MAX_SYMMETRIC_DEGREE:
        raise GroupSpecError(
            f'Symmetric group needs 2 <= k <= {MAX_SYMMETRIC_DEGREE}, got {k}'
        )

    permutations: np.ndarray = np.array(
        list(itertools.permutations(range(k))), dtype=np.int64
    )
    weights: np.ndarray = k ** np.arange(k - 1, -1, -1)

    # Lexicographic order equals numeric order of base-k codes.
    codes: np.ndarray = permutations @ weights

    def product(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        xs, ys = np.broadcast_arrays(np.asarray(xs), np.asarray(ys))
        composed: np.ndarray = np.take_along_axis(
            permutations[xs], permutations[ys], axis=-1
        )

        return np.searchsorted(codes, composed @ weights)

    def element_labels(x: int) -> str:
        return '[' + ' '.join(str(i) for i in permutations[x]) + ']'

    return FiniteGroup(
        label=f'sym:{k}', order=math.factorial(k), identity=0,
        product=product, element_labels=element_labels
    )


def make_gl2(
    q: int, irreducible: Optional[tuple[int, ...]] = None
) -> FiniteGroup:
    """
    GL(2,q): invertible 2x2 matrices [[a, b], [c, d]] over GF(q), in the
    order of their base-q codes.
    """
    if q <= 2:
        raise GroupSpecError(f'GL(2,q) needs q > 2, got {q}')

    split: Optional[tuple[int, int]] = prime_power(q)

    if split is None:
        raise GroupSpecError(f'GL(2,q) needs a prime power q, got {q}')

    p, k = split
    field: GaloisField = GaloisField(p=p, k=k, modulus=irreducible)

    add: np.ndarray = field.add_table
    mul: np.ndarray = field.mul_table
    neg: np.ndarray = field.negation

    values: np.ndarray = np.arange(q)
    a, b, c, d = (
        grid.ravel()
        for grid in np.meshgrid(values, values, values, values, indexing='ij')
    )
    determinant: np.ndarray = add[mul[a, d], neg[mul[b, c]]]
    invertible: np.ndarray = determinant != 0

    a, b, c, d = a[invertible], b[invertible], c[invertible], d[invertible]
    order: int = int(invertible.sum())

    index_of_code: np.ndarray = np.full(q ** 4, -1, dtype=np.int64)
    index_of_code[((a * q + b) * q + c) * q + d] = np.arange(order)

    identity: int = int(index_of_code[((1 * q + 0) * q + 0) * q + 1])

    def product(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        e11: np.ndarray = add[mul[a[xs], a[ys]], mul[b[xs], c[ys]]]
        e12: np.ndarray = add[mul[a[xs], b[ys]], mul[b[xs], d[ys]]]
        e21: np.ndarray = add[mul[c[xs], a[ys]], mul[d[xs], c[ys]]]
        e22: np.ndarray = add[mul[c[xs], b[ys]], mul[d[xs], d[ys]]]

        return index_of_code[((e11 * q + e12) * q + e21) * q + e22]

    def element_labels(x: int) -> str:
        return f'[[{a[x]},{b[x]}],[{c[x]},{d[x]}]]'

    return FiniteGroup(
        label=f'gl2:{q}', order=order, identity=identity, product=product,
        element_labels=element_labels
    )


def direct_product(
    g: FiniteGroup, h: FiniteGroup, cap: int = DEFAULT_VERTEX_CAP
) -> FiniteGroup:
    """
    Direct product with componentwise multiplication; element (x, y) has index
    x * |h| + y.
    """
    order: int = g.order * h.order

    if order > cap:
        raise VertexCapError(
            f'Product {g.label} x {h.label} has order {order}, above the cap'
            f' {cap}'
        )

    width: int = h.order

    def product(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        xs, ys = np.asarray(xs), np.asarray(ys)

        return (
            g.multiply_many(xs // width, ys // width) * width
            + h.multiply_many(xs % width, ys % width)
        )

    def element_labels(x: int) -> str:
        left, right = divmod(x, width)

        return f'({g.element_label(left)}, {h.element_label(right)})'

    return FiniteGroup(
        label=f'prod({g.label},{h.label})', order=order,
        identity=g.identity * width + h.identity, product=product,
        element_labels=element_labels, factors=(g, h)
    )


@dataclass(frozen=True)
class DihedralSpec:
    n: int

    def __str__(self) -> str:
        return f'dihedral:{self.n}'

    def build(self, cap: int = DEFAULT_VERTEX_CAP) -> FiniteGroup:
        return make_dihedral(self.n)


@dataclass(frozen=True)
class CyclicSpec:
    n: int

    def __str__(self) -> str:
        return f'cyclic:{self.n}'

    def build(self, cap: int = DEFAULT_VERTEX_CAP) -> FiniteGroup:
        return make_cyclic(self.n)


@dataclass(frozen=True)
class SymmetricSpec:
    k: int

    def __str__(self) -> str:
        return f'sym:{self.k}'

    def build(self, cap: int = DEFAULT_VERTEX_CAP) -> FiniteGroup:
        return make_symmetric(self.k)


@dataclass(frozen=True)
class GL2Spec:
    q: int
    irreducible: Optional[tuple[int, ...]] = None

    def __str__(self) -> str:
        if self.irreducible is None:
            return f'gl2:{self.q}'

        return f'gl2:{self.q}:[{",".join(str(c) for c in self.irreducible)}]'

    def build(self, cap: int = DEFAULT_VERTEX_CAP) -> FiniteGroup:
        return make_gl2(q=self.q, irreducible=self.irreducible)


@dataclass(frozen=True)
class ProductSpec:
    left: 'GroupSpec'
    right: 'GroupSpec'

    def __str__(self) -> str:
        return f'prod({self.left},{self.right})'

    def build(self, cap: int = DEFAULT_VERTEX_CAP) -> FiniteGroup:
        return direct_product(
            g=self.left.build(cap=cap), h=self.right.build(cap=cap), cap=cap
        )


GroupSpec: TypeAlias = Union[
    DihedralSpec, CyclicSpec, SymmetricSpec, GL2Spec, ProductSpec
]


class _SpecParser:
    """
    Recursive descent over the descriptor grammar:

        spec := 'dihedral:' INT | 'cyclic:' INT | 'sym:' INT
              | 'gl2:' INT [':[' INT (',' INT)* ']']
              | 'prod(' spec ',' spec ')'
    """

    def __init__(self, text: str) -> None:
        self.text: str = text.replace(' ', '')
        self.position: int = 0

    def fail(self, message: str) -> GroupSpecError:
        return GroupSpecError(
            f'Cannot parse group spec {self.text!r} at position'
            f' {self.position}: {message}'
        )

    def expect(self, token: str) -> None:
        if not self.text.startswith(token, self.position):
            raise self.fail(f'expected {token!r}')

        self.position += len(token)

    def integer(self) -> int:
        start: int = self.position

        while (
            self.position < len(self.text)
            and self.text[self.position].isdigit()
        ):
            self.position += 1

        if start == self.position:
            raise self.fail('expected an integer')

        return int(self.text[start:self.position])

    def spec(self) -> GroupSpec:
        if self.text.startswith('prod(', self.position):
            self.expect('prod(')
            left: GroupSpec = self.spec()
            self.expect(',')
            right: GroupSpec = self.spec()
            self.expect(')')

            return ProductSpec(left=left, right=right)

        if self.text.startswith('dihedral:', self.position):
            self.expect('dihedral:')
            n: int = self.integer()

            if n < 3:
                raise GroupSpecError(f'dihedral:{n} needs n >= 3')

            return DihedralSpec(n=n)

        if self.text.startswith('cyclic:', self.position):
            self.expect('cyclic:')
            n = self.integer()

            if n < 1:
                raise GroupSpecError(f'cyclic:{n} needs n >= 1')

            return CyclicSpec(n=n)

        if self.text.startswith('sym:', self.position):
            self.expect('sym:')
            k: int = self.integer()

            if not 2 <= k <= MAX_SYMMETRIC_DEGREE:
                raise GroupSpecError(
                    f'sym:{k} needs 2 <= k <= {MAX_SYMMETRIC_DEGREE}'
                )

            return SymmetricSpec(k=k)

        if self.text.startswith('gl2:', self.position):
            self.expect('gl2:')
            q: int = self.integer()

            if q < 3 or prime_power(q) is None:
                raise GroupSpecError(f'gl2:{q} needs a prime power q >= 3')

            irreducible: Optional[tuple[int, ...]] = None

            if self.text.startswith(':[', self.position):
                self.expect(':[')
                coefficients: list[int] = [self.integer()]

                while self.text.startswith(',', self.position):
                    self.expect(',')
                    coefficients.append(self.integer())

                self.expect(']')
                irreducible = tuple(coefficients)

            return GL2Spec(q=q, irreducible=irreducible)

        raise self.fail('expected dihedral, cyclic, sym, gl2 or prod')


def parse_group_spec(text: str) -> GroupSpec:
    parser: _SpecParser = _SpecParser(text=text)
    result: GroupSpec = parser.spec()

    if parser.position != len(parser.text):
        raise parser.fail('unexpected trailing input')

    return result
