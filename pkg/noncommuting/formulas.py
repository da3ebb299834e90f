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
Closed forms: complete multipartite graphs, dihedral and GL(2,q)
non-commuting graphs, and the direct-product factorisations.
"""

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Any, Callable, Final, Self

import networkx as nx
import numpy as np

from scipy.optimize import brentq

from noncommuting.charpoly import bareiss_determinant
from noncommuting.errors import GroupSpecError
from noncommuting.polynomials import FactoredPolynomial, IntPolynomial
from noncommuting.roots import (
    CubicCoefficients,
    IntegerRoot,
    NumericRoot,
    SurdRoot,
    solve_cubic,
    solve_quadratic,
    square_free_split
)
from noncommuting.spectra import (
    EnergyValue,
    Spectrum,
    assemble_exact_spectrum,
    spectrum_energy
)

# Relative accuracy of the spectral radius root search
RADIUS_TOLERANCE: Final[float] = 1e-13

# Characteristic polynomial of the D8 x D8 graph as displayed, det(A - xI) form
D8_SQUARED_CHARPOLY: Final[str] = (
    '(-x)^45*(-x+8)*(-x-4)^4*(x^2+8*x-32)^4*(x^2-40*x-128)'
)

# Energy of the D8 x D8 graph, 8(3 + sqrt(33) + 4 sqrt(3))
D8_SQUARED_ENERGY: Final[EnergyValue] = EnergyValue.build(
    rational=Fraction(24), surds={3: Fraction(32), 33: Fraction(8)}
)

# Quotient left after deflating the known factors of D12 x D12
D12_SQUARED_QUOTIENT: Final[FactoredPolynomial] = FactoredPolynomial(
    factors=(
        (IntPolynomial.linear(-24), 1),
        (IntPolynomial(coefficients=(2304, -384, 0, 1)), 1),
        (IntPolynomial(coefficients=(55296, 5376, -1152, -104, 1)), 1)
    )
)


def multipartite_adjacency(sizes: list[int]) -> np.ndarray:
    """
    Adjacency matrix of K_{n1,...,np}, parts laid out consecutively.
    """
    graph: nx.Graph = nx.complete_multipartite_graph(*sizes)

    return nx.to_numpy_array(
        graph, nodelist=range(sum(sizes)), dtype=np.uint8
    )


def multipartite_bracket(sizes: list[int]) -> IntPolynomial:
    """
    prod(x + n_j) - sum_i n_i prod_(j != i)(x + n_j): the degree-p factor
    left after clearing denominators.
    """
    linear: list[IntPolynomial] = [IntPolynomial(coefficients=(n, 1)) for n in sizes]

    product: IntPolynomial = IntPolynomial.constant(1)

    for factor in linear:
        product = product * factor

    correction: IntPolynomial = IntPolynomial()

    for i, n in enumerate(sizes):
        others: IntPolynomial = IntPolynomial.constant(n)

        for j, factor in enumerate(linear):
            if j != i:
                others = others * factor

        correction = correction + others

    return product - correction


def multipartite_charpoly(sizes: list[int]) -> IntPolynomial:
    """
    Characteristic polynomial of K_{n1,...,np}:
    x^(n-p) * (prod(x + n_j) - sum_i n_i prod_(j != i)(x + n_j)).
    """
    if not sizes or any(n < 1 for n in sizes):
        raise ValueError(f'Part sizes must be positive, got {sizes}')

    return (
        IntPolynomial.monomial(degree=sum(sizes) - len(sizes))
        * multipartite_bracket(sizes)
    )


def radius_equation(sizes: list[int], value: float) -> float:
    """
    sum n_i / (value + n_i) - 1, zero at the spectral radius.
    """
    return sum(n / (value + n) for n in sizes) - 1.0


def multipartite_spectral_radius(sizes: list[int]) -> float:
    """
    Largest adjacency eigenvalue of K_{n1,...,np}: the positive root of
    sum n_i / (x + n_i) = 1.
    """
    if len(sizes) < 2:
        return 0.0

    # The left side falls from p - 1 at 0 and is below zero at sum(sizes).
    return float(
        brentq(
            lambda value: radius_equation(sizes=sizes, value=value), 0.0,
            float(sum(sizes)), xtol=1e-300, rtol=RADIUS_TOLERANCE,
            maxiter=500
        )
    )


def multipartite_intervals(sizes: list[int]) -> list[tuple[int, int]]:
    """
    Closed intervals [-n_i, -n_(i+1)] holding the p - 1 negative eigenvalues,
    sizes taken in non-increasing order.
    """
    ordered: list[int] = sorted(sizes, reverse=True)

    return [(-ordered[i], -ordered[i + 1]) for i in range(len(ordered) - 1)]


def multipartite_interval_check(
    sizes: list[int], eigenvalues: list[float], slack: float = 1e-8
) -> bool:
    """
    The p - 1 most negative eigenvalues, ascending, lie in the intervals
    in order.
    """
    intervals: list[tuple[int, int]] = multipartite_intervals(sizes)
    negatives: list[float] = sorted(eigenvalues)[:len(intervals)]

    return all(
        low - slack <= value <= high + slack
        for value, (low, high) in zip(negatives, intervals)
    )


def multipartite_energy(sizes: list[int]) -> EnergyValue:
    """
    2 * spectral radius; exact when the radius is an integer or a quadratic
    surd.
    """
    if len(sizes) < 2:
        return EnergyValue.build(rational=Fraction(0), surds={})

    radius: float = multipartite_spectral_radius(sizes)
    largest: Any = assemble_exact_spectrum(multipartite_bracket(sizes)).entries[0].root

    if isinstance(largest, IntegerRoot):
        return EnergyValue.build(rational=Fraction(2 * largest.value), surds={})

    if isinstance(largest, SurdRoot):
        return EnergyValue.build(
            rational=Fraction(largest.a), surds={largest.d: Fraction(largest.b)}
        )

    return EnergyValue.from_numeric(
        value=2 * radius, error=2 * radius * RADIUS_TOLERANCE
    )


def _check_dihedral(n: int) -> None:
    if n < 3:
        raise GroupSpecError(f'Dihedral formulas need n >= 3, got {n}')


def dihedral_parts(n: int) -> list[int]:
    """
    Part sizes of the complete multipartite graph of D_2n.
    """
    _check_dihedral(n)

    if n % 2 == 0:
        return [n - 2] + [2] * (n // 2)

    return [n - 1] + [1] * n


def dihedral_charpoly(n: int) -> FactoredPolynomial:
    """
    Monic factored characteristic polynomial of the D_2n graph.
    """
    _check_dihedral(n)

    if n % 2 == 0:
        return FactoredPolynomial(
            factors=(
                (IntPolynomial.x(), 3 * n // 2 - 3),
                (IntPolynomial.linear(-2), n // 2 - 1),
                (IntPolynomial(coefficients=(-n * (n - 2), -(n - 2), 1)), 1)
            )
        )

    return FactoredPolynomial(
        factors=(
            (IntPolynomial.x(), n - 2),
            (IntPolynomial.linear(-1), n - 1),
            (IntPolynomial(coefficients=(-n * (n - 1), -(n - 1), 1)), 1)
        )
    )


def dihedral_spectrum(n: int) -> Spectrum:
    """
    Adjacency spectrum of the D_2n graph. The n = 4 case is the even formula
    at n = 4: the quadratic then has the integer roots 4 and -2.
    """
    _check_dihedral(n)

    if n % 2 == 0:
        large, small = solve_quadratic(a1=-(n - 2), a0=-n * (n - 2))

        return Spectrum.from_roots(
            [
                (IntegerRoot(value=-2), n // 2 - 1),
                (IntegerRoot(value=0), 3 * n // 2 - 3),
                (large, 1),
                (small, 1)
            ]
        )

    large, small = solve_quadratic(a1=-(n - 1), a0=-n * (n - 1))

    return Spectrum.from_roots(
        [
            (IntegerRoot(value=-1), n - 1),
            (IntegerRoot(value=0), n - 2),
            (large, 1),
            (small, 1)
        ]
    )


def dihedral_energy(n: int) -> EnergyValue:
    """
    (n-2) + sqrt(5n^2 - 12n + 4) for even n, (n-1) + sqrt(5n^2 - 6n + 1) for
    odd n.
    """
    _check_dihedral(n)

    if n % 2 == 0:
        rational, radicand = n - 2, 5 * n * n - 12 * n + 4

    else:
        rational, radicand = n - 1, 5 * n * n - 6 * n + 1

    k, d = square_free_split(radicand)

    if d == 1:
        return EnergyValue.build(rational=Fraction(rational + k), surds={})

    return EnergyValue.build(rational=Fraction(rational), surds={d: Fraction(k)})


def dihedral_laplacian_spectrum(n: int) -> Spectrum:
    _check_dihedral(n)

    if n % 2 == 0:
        return Spectrum.from_roots(
            [
                (IntegerRoot(value=2 * n - 2), n // 2),
                (IntegerRoot(value=2 * n - 4), n // 2),
                (IntegerRoot(value=n), n - 3),
                (IntegerRoot(value=0), 1)
            ]
        )

    return Spectrum.from_roots(
        [
            (IntegerRoot(value=2 * n - 1), n),
            (IntegerRoot(value=n), n - 2),
            (IntegerRoot(value=0), 1)
        ]
    )


def dihedral_laplacian_charpoly(n: int) -> IntPolynomial:
    result: IntPolynomial = IntPolynomial.constant(1)

    for entry in dihedral_laplacian_spectrum(n).entries:
        result = result * IntPolynomial.linear(entry.root.value) ** entry.multiplicity

    return result


def dihedral_laplacian_energy_stated(n: int) -> Fraction:
    """
    Closed form as stated: 2n(n^2 - 4n + 6) / (2n - 2) for even n,
    3n(n - 1) for odd n.
    """
    _check_dihedral(n)

    if n % 2 == 0:
        return Fraction(2 * n * (n * n - 4 * n + 6), 2 * n - 2)

    return Fraction(3 * n * (n - 1))


def dihedral_laplacian_energy_definition(n: int) -> Fraction:
    """
    sum |mu_i - 2m/N| over the Laplacian spectrum, N = vertex count.
    """
    spectrum: Spectrum = dihedral_laplacian_spectrum(n)
    vertices: int = spectrum.total_multiplicity
    mean: Fraction = Fraction(
        sum(e.root.value * e.multiplicity for e in spectrum.entries), vertices
    )

    return sum(
        (abs(e.root.value - mean) * e.multiplicity for e in spectrum.entries),
        Fraction(0)
    )


@dataclass(frozen=True)
class GLFormulaBundle:
    """
    Every quantity of the GL(2,q) closed form for one q.
    """

    q: int

    def __post_init__(self) -> None:
        if self.q < 3:
            raise GroupSpecError(f'GL(2,q) formulas need q >= 3, got {self.q}')

    @property
    def t(self) -> int:
        """
        Number of parts of the complete multipartite graph.
        """
        return self.q * self.q + self.q + 1

    @property
    def vertex_count(self) -> int:
        q: int = self.q

        return (q * q - 1) * (q * q - q) - (q - 1)

    @property
    def zero_multiplicity(self) -> int:
        return self.vertex_count - self.t

    @property
    def cubic(self) -> CubicCoefficients:
        q: int = self.q

        return CubicCoefficients(
            b=-q ** 4 + q ** 3 + 4 * q ** 2 - 6 * q + 2,
            c=(
                -2 * q ** 6 + 6 * q ** 5 - q ** 4 - 13 * q ** 3 + 15 * q ** 2
                - 5 * q
            ),
            d=-(q - 1) ** 4 * q ** 2 * (q - 2) * (q + 1)
        )

    @property
    def linear_factors(self) -> tuple[tuple[int, int], ...]:
        """
        (root, exponent) of the three linear factors.
        """
        q: int = self.q

        return (
            (-(q - 1) ** 2, q),
            (-q * (q - 1), (q * q - q - 2) // 2),
            (-(q - 1) * (q - 2), (q * q + q - 2) // 2)
        )

    @property
    def parts(self) -> list[int]:
        """
        Part sizes: q+1 parts of size (q-1)^2, q(q-1)/2 of size q(q-1),
        q(q+1)/2 of size (q-1)(q-2).
        """
        q: int = self.q

        return sorted(
            [(q - 1) ** 2] * (q + 1) + [q * (q - 1)] * (q * (q - 1) // 2)
            + [(q - 1) * (q - 2)] * (q * (q + 1) // 2),
            reverse=True
        )

    def exponent_sum_holds(self) -> bool:
        return (
            sum(exponent for _, exponent in self.linear_factors)
            + self.zero_multiplicity + 3 == self.vertex_count
        )

    def linear_energy(self) -> int:
        return sum(-root * exponent for root, exponent in self.linear_factors)


def gl2_charpoly(q: int) -> FactoredPolynomial:
    """
    x^(n-t) * cubic * (x + (q-1)^2)^q * (x + q(q-1))^((q^2-q-2)/2)
    * (x + (q-1)(q-2))^((q^2+q-2)/2).
    """
    bundle: GLFormulaBundle = GLFormulaBundle(q=q)

    return FactoredPolynomial(
        factors=(
            (IntPolynomial.x(), bundle.zero_multiplicity),
            (bundle.cubic.polynomial, 1),
            *(
                (IntPolynomial.linear(root), exponent)
                for root, exponent in bundle.linear_factors
            )
        )
    )


def gl2_energy(q: int) -> EnergyValue:
    """
    |g1| + |g2| + |g3| over the cubic roots plus the exact linear part.
    """
    bundle: GLFormulaBundle = GLFormulaBundle(q=q)
    roots: tuple[NumericRoot, ...] = solve_cubic(bundle.cubic)

    return EnergyValue.build(
        rational=Fraction(bundle.linear_energy()), surds={},
        numeric_extra=sum(abs(root.value) for root in roots),
        error=sum(root.error for root in roots), exact=False
    )


def d2n_squared_cubic(n: int) -> IntPolynomial:
    """
    x^3 + (2n+4) x^2 - 16n(n-2), sign-normalised cubic factor of D_2n x D_2n.
    """
    return IntPolynomial(coefficients=(-16 * n * (n - 2), 0, 2 * n + 4, 1))


def d2n_squared_factors(n: int) -> list[tuple[IntPolynomial, int]]:
    """
    Known factors of the D_2n x D_2n characteristic polynomial, n even > 4.
    """
    if n % 2 or n <= 4:
        raise GroupSpecError(f'D_2n x D_2n formula needs even n > 4, got {n}')

    return [
        (IntPolynomial.x(), 15 * n * n // 4 - 2 * n - 7),
        (IntPolynomial.linear(-4), n * n // 4 - n + 1),
        (d2n_squared_cubic(n), n - 2)
    ]


def d2n_squared_energy(n: int, quotient: IntPolynomial) -> EnergyValue:
    """
    (n-2)^2 + (n-2)(|a1| + |a2| + |a3|) + sum |g_i|, a_i the cubic roots and
    g_i the roots of the quotient.
    """
    cubic: IntPolynomial = d2n_squared_cubic(n)
    alphas: tuple[NumericRoot, ...] = solve_cubic(
        CubicCoefficients(
            b=cubic.coefficient(2), c=cubic.coefficient(1),
            d=cubic.coefficient(0)
        )
    )
    rest: EnergyValue = spectrum_energy(assemble_exact_spectrum(quotient))

    # Numeric-only share of the quotient energy.
    rest_numeric: float = rest.numeric - EnergyValue.build(
        rational=rest.rational, surds=dict(rest.surds)
    ).numeric

    return EnergyValue.build(
        rational=Fraction((n - 2) ** 2) + rest.rational,
        surds=dict(rest.surds),
        numeric_extra=(
            (n - 2) * sum(abs(root.value) for root in alphas) + rest_numeric
        ),
        error=(n - 2) * sum(root.error for root in alphas) + rest.error,
        exact=False
    )


class BlockFamily(StrEnum):
    """
    Direct products G x H whose characteristic polynomial factors into block
    determinants over A0(G).
    """

    UNKNOWN = 'unknown'

    GXS3 = 'gxs3'
    GXD2N = 'gxd2n'
    GXD8 = 'gxd8'

    @classmethod
    def _missing_(cls, value: Any) -> Self:
        return cls.UNKNOWN


def _determinant(blocks: list[list[np.ndarray]]) -> int:
    return bareiss_determinant(np.block(blocks).tolist())


def block_rhs(
    family: BlockFamily, a0: np.ndarray, n: int = 4
) -> Callable[[int], int]:
    """
    Evaluator of det(A0(G x H) - xI) as the product of block determinants,
    before division by (-x)^|Z(G x H)|. a0 is the augmented adjacency of G;
    n is the dihedral parameter of the G x D_2n family.
    """
    a: np.ndarray = np.asarray(a0, dtype=np.int64)
    m: int = a.shape[0]
    j: np.ndarray = np.ones((m, m), dtype=np.int64)
    identity: np.ndarray = np.eye(m, dtype=np.int64)

    if family is BlockFamily.GXD2N and (n % 2 or n < 4):
        raise GroupSpecError(f'G x D_2n family needs even n >= 4, got {n}')

    def evaluate(x: int) -> int:
        xi: np.ndarray = x * identity

        if family is BlockFamily.GXS3:
            return (
                (-x) ** m
                * bareiss_determinant((a - xi - j).tolist()) ** 2
                * _determinant(
                    [
                        [a - xi, 2 * a, 3 * a],
                        [a, 2 * a - xi, 3 * j],
                        [a, 2 * j, a - xi + 2 * j]
                    ]
                )
            )

        if family is BlockFamily.GXD2N:
            return (
                (-x) ** (m * (3 * n // 2 - 2))
                * bareiss_determinant((2 * a - xi - 2 * j).tolist()) ** (n // 2 - 1)
                * _determinant(
                    [
                        [2 * a - xi, (n - 2) * a, n * a],
                        [2 * a, (n - 2) * a - xi, n * j],
                        [2 * a, (n - 2) * j, 2 * a - xi + (n - 2) * j]
                    ]
                )
            )

        if family is BlockFamily.GXD8:
            return (
                (-x) ** (4 * m)
                * bareiss_determinant((2 * a - xi - 2 * j).tolist()) ** 2
                * _determinant(
                    [
                        [2 * a - xi, 6 * a],
                        [2 * a, 2 * a - xi + 4 * j]
                    ]
                )
            )

        raise GroupSpecError(f'Unknown block family {family!r}')

    return evaluate
