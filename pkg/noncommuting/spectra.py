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
Spectra of graphs: numeric eigensolver, exact spectrum assembly from a
characteristic polynomial, graph energy and Laplacian energy.
"""

import math

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Final, Iterable, Optional, Self

import numpy as np
import sympy

from noncommuting.charpoly import charpoly
from noncommuting.config import (
    DEFAULT_EXACT_LIMIT,
    JACOBI_MAX_SWEEPS,
    JACOBI_TOLERANCE,
    MULTIPLICITY_GAP,
    Eigensolver
)
from noncommuting.errors import NotSymmetricError
from noncommuting.graphs import Graph, edge_count, laplacian
from noncommuting.polynomials import (
    IntPolynomial,
    deflate,
    multiplicity_of,
    square_free_decomposition
)
from noncommuting.roots import (
    ExactRoot,
    IntegerRoot,
    NumericRoot,
    SurdRoot,
    solve_quadratic
)

# Working precision (decimal digits) for roots of residual factors
ROOT_PRECISION: Final[int] = 60

# Iteration limit of the numeric root finder
ROOT_MAX_STEPS: Final[int] = 500

# Variable of sympy polynomials built from coefficient lists
ROOT_SYMBOL: Final[sympy.Symbol] = sympy.Symbol('x')

# Digits used to evaluate exact energies
ENERGY_PRECISION: Final[int] = 30

# Distance from an integer below which a numeric sum/product is rounded
PAIRING_SLACK: Final[float] = 1e-6


@dataclass(frozen=True)
class SpectrumEntry:
    root: ExactRoot
    multiplicity: int


@dataclass(frozen=True)
class Spectrum:
    """
    Eigenvalues with multiplicities, largest eigenvalue first.
    """

    entries: tuple[SpectrumEntry, ...] = ()

    @classmethod
    def from_roots(cls, roots: Iterable[tuple[ExactRoot, int]]) -> Self:
        """
        Merge equal roots and sort by descending value.
        """
        merged: dict[ExactRoot, int] = {}

        for root, multiplicity in roots:
            if multiplicity > 0:
                merged[root] = merged.get(root, 0) + multiplicity

        return cls(
            entries=tuple(
                SpectrumEntry(root=root, multiplicity=multiplicity)
                for root, multiplicity in sorted(
                    merged.items(), key=lambda item: item[0].numeric,
                    reverse=True
                )
            )
        )

    @property
    def total_multiplicity(self) -> int:
        return sum(entry.multiplicity for entry in self.entries)

    def is_exact(self) -> bool:
        return not any(
            isinstance(entry.root, NumericRoot) for entry in self.entries
        )

    def values(self) -> list[float]:
        """
        Every eigenvalue repeated by multiplicity, descending.
        """
        return [
            entry.root.numeric
            for entry in self.entries for _ in range(entry.multiplicity)
        ]

    def trace(self) -> float:
        return sum(entry.root.numeric * entry.multiplicity for entry in self.entries)

    def multiplicity(self, root: ExactRoot) -> int:
        return sum(
            entry.multiplicity for entry in self.entries if entry.root == root
        )

    def nonzero(self) -> Self:
        return Spectrum(
            entries=tuple(
                entry for entry in self.entries
                if entry.root != IntegerRoot(value=0)
                and not (
                    isinstance(entry.root, NumericRoot)
                    and abs(entry.root.value) <= entry.root.error
                )
            )
        )

    def scaled(self, factor: int) -> Self:
        """
        Spectrum with every eigenvalue multiplied by a positive integer.
        """
        if factor < 1:
            raise ValueError(f'Scale factor must be positive, got {factor}')

        return Spectrum.from_roots(
            (_scale_root(root=entry.root, factor=factor), entry.multiplicity)
            for entry in self.entries
        )

    def render(self) -> str:
        """
        '(value)^multiplicity' terms, largest first, simple roots bare.
        """
        return ' '.join(
            entry.root.render() if entry.multiplicity == 1
            else f'({entry.root.render()})^{entry.multiplicity}'
            for entry in self.entries
        )

    def to_json(self) -> list[dict[str, Any]]:
        result: list[dict[str, Any]] = []

        for entry in self.entries:
            root: ExactRoot = entry.root
            item: dict[str, Any] = {}

            if isinstance(root, IntegerRoot):
                item = {'kind': 'integer', 'value': str(root.value)}

            elif isinstance(root, SurdRoot):
                item = {
                    'kind': 'surd', 'value': root.render(), 'a': root.a,
                    'b': root.b, 'd': root.d
                }

            else:
                item = {
                    'kind': 'numeric', 'value': root.value, 'error': root.error
                }

            item['multiplicity'] = entry.multiplicity
            result.append(item)

        return result

    @classmethod
    def from_json(cls, data: list[dict[str, Any]]) -> Self:
        roots: list[tuple[ExactRoot, int]] = []

        for item in data:
            root: ExactRoot

            if item['kind'] == 'integer':
                root = IntegerRoot(value=int(item['value']))

            elif item['kind'] == 'surd':
                root = SurdRoot(a=item['a'], b=item['b'], d=item['d'])

            elif item['kind'] == 'numeric':
                root = NumericRoot(
                    value=float(item['value']), error=float(item['error'])
                )

            else:
                raise ValueError(f'Unknown root kind {item["kind"]!r}')

            roots.append((root, int(item['multiplicity'])))

        return cls.from_roots(roots)


def _scale_root(root: ExactRoot, factor: int) -> ExactRoot:
    if isinstance(root, IntegerRoot):
        return IntegerRoot(value=root.value * factor)

    if isinstance(root, SurdRoot):
        return SurdRoot(a=root.a * factor, b=root.b * factor, d=root.d)

    return NumericRoot(value=root.value * factor, error=root.error * factor)


def _absolute_surd(
    rational: Fraction, coefficient: Fraction, d: int
) -> tuple[Fraction, Fraction]:
    """
    |rational + coefficient*sqrt(d)| as a (rational, coefficient) pair,
    sign decided exactly.
    """
    if rational >= 0 and coefficient >= 0:
        return rational, coefficient

    if rational <= 0 and coefficient <= 0:
        return -rational, -coefficient

    positive: bool = (
        rational * rational > coefficient * coefficient * d
        if rational > 0 else coefficient * coefficient * d > rational * rational
    )

    return (rational, coefficient) if positive else (-rational, -coefficient)


@dataclass(frozen=True)
class EnergyValue:
    """
    Energy as rational + sum of c_d*sqrt(d) when exact, always with a numeric
    value and an absolute error bound. Numeric-only parts clear exact.
    """

    rational: Fraction = Fraction(0)
    surds: tuple[tuple[int, Fraction], ...] = ()
    numeric: float = 0.0
    error: float = 0.0
    exact: bool = True

    @classmethod
    def build(
        cls, rational: Fraction, surds: dict[int, Fraction],
        numeric_extra: float = 0.0, error: float = 0.0, exact: bool = True
    ) -> Self:
        terms: tuple[tuple[int, Fraction], ...] = tuple(
            (d, c) for d, c in sorted(surds.items()) if c != 0
        )

        value: sympy.Expr = sympy.Rational(rational.numerator, rational.denominator)

        for d, c in terms:
            value += sympy.Rational(c.numerator, c.denominator) * sympy.sqrt(d)

        numeric: float = float(sympy.N(value, ENERGY_PRECISION)) + numeric_extra

        return cls(
            rational=rational, surds=terms, numeric=numeric,
            error=error + abs(numeric) * 1e-15, exact=exact
        )

    @classmethod
    def from_numeric(cls, value: float, error: float) -> Self:
        return cls(numeric=value, error=error, exact=False)

    def to_sympy(self) -> sympy.Expr:
        if not self.exact:
            raise ValueError('Energy has no exact form')

        expression: sympy.Expr = sympy.Rational(
            self.rational.numerator, self.rational.denominator
        )

        for d, c in self.surds:
            expression += sympy.Rational(c.numerator, c.denominator) * sympy.sqrt(d)

        return expression

    def equals_exact(self, other: Self) -> bool:
        return (
            self.exact and other.exact
            and sympy.simplify(self.to_sympy() - other.to_sympy()) == 0
        )

    def close_to(self, value: float, tolerance: float) -> bool:
        return abs(self.numeric - value) <= tolerance + self.error

    def scaled(self, factor: int) -> Self:
        return EnergyValue(
            rational=self.rational * factor,
            surds=tuple((d, c * factor) for d, c in self.surds),
            numeric=self.numeric * factor, error=self.error * factor,
            exact=self.exact
        )

    def render(self) -> str:
        """
        'a+b*sqrt(d)+...' when exact, a decimal otherwise.
        """
        if not self.exact:
            return f'{self.numeric:.10f}'

        parts: list[str] = []

        if self.rational != 0 or not self.surds:
            parts.append(_render_rational(self.rational))

        for d, c in self.surds:
            magnitude: str = (
                f'sqrt({d})' if abs(c) == 1
                else f'{_render_rational(abs(c))}*sqrt({d})'
            )

            if not parts:
                parts.append(magnitude if c > 0 else f'-{magnitude}')

            else:
                parts.append(f'+{magnitude}' if c > 0 else f'-{magnitude}')

        return ''.join(parts)

    def to_json(self) -> dict[str, Any]:
        return {
            'exact': self.render() if self.exact else None,
            'numeric': self.numeric,
            'error': self.error
        }


def _render_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else str(value)


def _check_symmetric(matrix: np.ndarray) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=float)

    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NotSymmetricError(f'Expected a square matrix, got {matrix.shape}')

    if not np.array_equal(matrix, matrix.T):
        raise NotSymmetricError('Matrix is not symmetric')

    return matrix


def _jacobi(matrix: np.ndarray, tol: float) -> np.ndarray:
    """
    Cyclic Jacobi: sweep all pairs (p, q) in row order, rotating each
    off-diagonal entry to zero, until the off-diagonal norm drops below
    tol * ||A||_F.
    """
    a: np.ndarray = matrix.copy()
    n: int = a.shape[0]
    norm: float = float(np.linalg.norm(a))

    if norm == 0.0:
        return np.diag(a).copy()

    target: float = tol * norm

    for _ in range(JACOBI_MAX_SWEEPS):
        off: float = float(np.linalg.norm(a - np.diag(np.diag(a))))

        if off < target:
            break

        # Entries this small cannot move the off-diagonal norm above target.
        skip: float = target / n

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq: float = a[p, q]

                if abs(apq) < skip:
                    continue

                theta: float = (a[q, q] - a[p, p]) / (2.0 * apq)
                t: float = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0)
                )
                c: float = 1.0 / math.sqrt(t * t + 1.0)
                s: float = t * c

                column_p: np.ndarray = a[:, p].copy()
                column_q: np.ndarray = a[:, q].copy()
                a[:, p] = c * column_p - s * column_q
                a[:, q] = s * column_p + c * column_q

                row_p: np.ndarray = a[p, :].copy()
                row_q: np.ndarray = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q

                a[p, q] = a[q, p] = 0.0

    else:
        raise ArithmeticError(
            f'Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps'
        )

    return np.diag(a).copy()


def eigenvalues_numeric(
    matrix: np.ndarray, tol: float = JACOBI_TOLERANCE,
    solver: Eigensolver = Eigensolver.JACOBI
) -> np.ndarray:
    """
    All eigenvalues of a symmetric matrix, largest first.
    """
    matrix = _check_symmetric(matrix)

    if matrix.shape[0] == 0:
        return np.zeros(0)

    if solver is Eigensolver.LAPACK:
        values: np.ndarray = np.linalg.eigvalsh(matrix)

    else:
        values = _jacobi(matrix=matrix, tol=tol)

    return np.sort(values)[::-1]


def group_numeric(
    eigenvalues: Iterable[float], gap: float = MULTIPLICITY_GAP
) -> Spectrum:
    """
    Merge eigenvalues closer than gap into one entry with multiplicity.
    """
    ordered: list[float] = sorted(eigenvalues, reverse=True)
    clusters: list[list[float]] = []

    for value in ordered:
        if clusters and clusters[-1][-1] - value < gap:
            clusters[-1].append(value)

        else:
            clusters.append([value])

    return Spectrum.from_roots(
        (
            NumericRoot(
                value=sum(cluster) / len(cluster),
                error=(cluster[0] - cluster[-1]) / 2
            ),
            len(cluster)
        )
        for cluster in clusters
    )


def _root_bound(poly: IntPolynomial) -> int:
    """
    Fujiwara-type bound 2 * max |a_(n-k) / a_n|^(1/k) on |roots|.
    """
    n: int = poly.degree
    lead: int = abs(poly.leading)
    bound: float = 0.0

    for k in range(1, n + 1):
        c: int = abs(poly.coefficient(n - k))

        if c:
            bound = max(bound, math.exp((math.log(c) - math.log(lead)) / k))

    return math.ceil(2 * bound) + 1


def _integer_roots(
    poly: IntPolynomial
) -> tuple[list[tuple[ExactRoot, int]], IntPolynomial]:
    """
    Integer roots with multiplicities (by exact deflation), and the cofactor.
    """
    roots: list[tuple[ExactRoot, int]] = []

    zeros: int = poly.valuation()

    if zeros:
        roots.append((IntegerRoot(value=0), zeros))
        poly = IntPolynomial(coefficients=poly.coefficients[zeros:])

    bound: int = _root_bound(poly)

    for candidate in range(-bound, bound + 1):
        if poly.degree < 1:
            break

        if candidate == 0 or poly.coefficient(0) % candidate != 0:
            continue

        multiplicity: int = multiplicity_of(
            poly=poly, factor=IntPolynomial.linear(candidate)
        )

        if multiplicity:
            roots.append((IntegerRoot(value=candidate), multiplicity))
            poly = deflate(
                poly=poly, factor=IntPolynomial.linear(candidate),
                multiplicity=multiplicity
            )

    return roots, poly


def _numeric_roots(poly: IntPolynomial) -> list[tuple[float, float]]:
    """
    Real parts and error estimates of the roots of a square-free polynomial.
    Some root lies within degree * |f(z)/f'(z)| of every approximation z.
    """
    derivative: IntPolynomial = poly.derivative()
    result: list[tuple[float, float]] = []

    for root in sympy.Poly(list(reversed(poly.coefficients)), ROOT_SYMBOL).nroots(
        n=ROOT_PRECISION, maxsteps=ROOT_MAX_STEPS
    ):
        real, imaginary = root.as_real_imag()
        bound: sympy.Float = poly.degree * abs(
            sympy.N(poly(root), ROOT_PRECISION)
        ) / abs(sympy.N(derivative(root), ROOT_PRECISION))

        result.append((float(real), float(bound) + abs(float(imaginary))))

    return result


def _surd_pairs(
    factor: IntPolynomial, multiplicity: int
) -> list[tuple[ExactRoot, int]]:
    """
    Split one square-free factor into quadratic surd pairs (found by rounding
    numeric sums and products and confirmed by exact division) and numeric
    leftovers.
    """
    roots: list[tuple[ExactRoot, int]] = []
    remaining: list[tuple[float, float]] = _numeric_roots(factor)
    used: set[int] = set()

    for i in range(len(remaining)):
        if i in used:
            continue

        for j in range(i + 1, len(remaining)):
            if j in used:
                continue

            total: float = remaining[i][0] + remaining[j][0]
            product: float = remaining[i][0] * remaining[j][0]
            s: int = round(total)
            p: int = round(product)

            if (
                abs(total - s) > PAIRING_SLACK * max(1.0, abs(total))
                or abs(product - p) > PAIRING_SLACK * max(1.0, abs(product))
            ):
                continue

            quadratic: IntPolynomial = IntPolynomial(coefficients=(p, -s, 1))

            if not divmod(factor, quadratic)[1].is_zero():
                continue

            for root in solve_quadratic(a1=-s, a0=p):
                roots.append((root, multiplicity))

            used.update((i, j))
            break

    for k, (value, error) in enumerate(remaining):
        if k not in used:
            roots.append((NumericRoot(value=value, error=error), multiplicity))

    return roots


def assemble_exact_spectrum(poly: IntPolynomial) -> Spectrum:
    """
    Spectrum of a characteristic polynomial: integer roots and quadratic surds
    exactly, other roots numerically with error bounds.
    """
    if poly.is_zero():
        raise ValueError('Zero polynomial has no spectrum')

    roots, rest = _integer_roots(poly)

    for factor, multiplicity in square_free_decomposition(rest):
        roots.extend(_surd_pairs(factor=factor, multiplicity=multiplicity))

    return Spectrum.from_roots(roots)


def spectrum_energy(spectrum: Spectrum, shift: Fraction = Fraction(0)) -> EnergyValue:
    """
    Sum of multiplicity * |lambda - shift| over a spectrum.
    """
    rational: Fraction = Fraction(0)
    surds: dict[int, Fraction] = {}
    numeric_extra: float = 0.0
    error: float = 0.0

    for entry in spectrum.entries:
        root: ExactRoot = entry.root

        if isinstance(root, IntegerRoot):
            rational += abs(root.value - shift) * entry.multiplicity

        elif isinstance(root, SurdRoot):
            r, c = _absolute_surd(
                rational=root.rational_part - shift,
                coefficient=root.surd_coefficient, d=root.d
            )
            rational += r * entry.multiplicity
            surds[root.d] = surds.get(root.d, Fraction(0)) + c * entry.multiplicity

        else:
            numeric_extra += abs(root.value - float(shift)) * entry.multiplicity
            error += root.error * entry.multiplicity

    return EnergyValue.build(
        rational=rational, surds=surds, numeric_extra=numeric_extra,
        error=error, exact=spectrum.is_exact()
    )


def numeric_energy(
    eigenvalues: np.ndarray, tol: float = JACOBI_TOLERANCE, shift: float = 0.0
) -> EnergyValue:
    values: np.ndarray = np.asarray(eigenvalues, dtype=float)
    scale: float = float(np.abs(values).max()) if len(values) else 0.0

    return EnergyValue.from_numeric(
        value=float(np.abs(values - shift).sum()),
        error=len(values) * tol * max(1.0, scale)
    )


@dataclass(frozen=True)
class SpectralData:
    """
    Spectrum of a matrix plus how it was obtained.
    """

    spectrum: Spectrum
    polynomial: Optional[IntPolynomial] = None
    eigenvalues: Optional[np.ndarray] = field(default=None, compare=False)


def matrix_spectrum(
    matrix: np.ndarray, exact_limit: int = DEFAULT_EXACT_LIMIT,
    tol: float = JACOBI_TOLERANCE, solver: Eigensolver = Eigensolver.JACOBI
) -> SpectralData:
    """
    Exact spectrum through the characteristic polynomial up to exact_limit
    rows, grouped numeric eigenvalues above.
    """
    if matrix.shape[0] <= exact_limit:
        polynomial: IntPolynomial = charpoly(matrix)

        return SpectralData(
            spectrum=assemble_exact_spectrum(polynomial), polynomial=polynomial
        )

    eigenvalues: np.ndarray = eigenvalues_numeric(
        matrix=matrix, tol=tol, solver=solver
    )

    return SpectralData(
        spectrum=group_numeric(eigenvalues), eigenvalues=eigenvalues
    )


def energy(
    graph: Graph, exact_limit: int = DEFAULT_EXACT_LIMIT,
    tol: float = JACOBI_TOLERANCE, solver: Eigensolver = Eigensolver.JACOBI
) -> EnergyValue:
    """
    Sum of absolute adjacency eigenvalues.
    """
    if graph.is_null():
        return EnergyValue.build(rational=Fraction(0), surds={})

    data: SpectralData = matrix_spectrum(
        matrix=graph.adjacency, exact_limit=exact_limit, tol=tol, solver=solver
    )

    if data.eigenvalues is not None:
        return numeric_energy(eigenvalues=data.eigenvalues, tol=tol)

    return spectrum_energy(data.spectrum)


def laplacian_energy(
    graph: Graph, exact_limit: int = DEFAULT_EXACT_LIMIT,
    tol: float = JACOBI_TOLERANCE, solver: Eigensolver = Eigensolver.JACOBI
) -> EnergyValue:
    """
    Sum of |mu_i - 2m/n| over Laplacian eigenvalues, n the vertex count.
    """
    if graph.is_null():
        return EnergyValue.build(rational=Fraction(0), surds={})

    mean: Fraction = Fraction(2 * edge_count(graph), graph.vertex_count)
    data: SpectralData = matrix_spectrum(
        matrix=laplacian(graph).matrix, exact_limit=exact_limit, tol=tol,
        solver=solver
    )

    if data.eigenvalues is not None:
        return numeric_energy(
            eigenvalues=data.eigenvalues, tol=tol, shift=float(mean)
        )

    return spectrum_energy(spectrum=data.spectrum, shift=mean)
