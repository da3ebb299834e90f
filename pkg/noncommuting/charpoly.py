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
Exact characteristic polynomials det(xI - A) of integer matrices.

The main path reduces A to upper Hessenberg form over GF(p) for a family of
primes below 2^31 (so every product of two residues fits into int64) and
recombines the coefficients with the Chinese remainder theorem. The number of
primes follows a Hadamard-type bound on the coefficients, so the result is
exact, never probabilistic.
"""

import math

from typing import Final, Optional

import numpy as np
import sympy

from sympy.ntheory.modular import crt

from noncommuting.config import (
    FADDEEV_LEVERRIER_LIMIT,
    MAX_EXACT_DIMENSION,
    MODULAR_PRIME_BITS
)
from noncommuting.errors import MatrixTooLargeError
from noncommuting.polynomials import IntPolynomial

# Word-sized primes for the exact path stay below this bound
WORD_PRIME_LIMIT: Final[int] = 2 ** 31

# Primes above this bound switch modular arithmetic to Python integers
INT64_SAFE_PRIME: Final[int] = 2 ** 31

# charpoly_mod accepts primes below this bound
MAX_MODULUS: Final[int] = 2 ** 61


def _as_square(matrix: np.ndarray) -> np.ndarray:
    matrix = np.asarray(matrix)

    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f'Expected a square matrix, got shape {matrix.shape}')

    return matrix


def _hessenberg_mod(matrix: np.ndarray, p: int) -> np.ndarray:
    """
    Upper Hessenberg form similar to matrix over GF(p).
    """
    dtype: type = np.int64 if p < INT64_SAFE_PRIME else object
    h: np.ndarray = (
        np.array([[int(v) % p for v in row] for row in matrix], dtype=dtype)
        if dtype is object else np.mod(matrix.astype(np.int64), p)
    )
    n: int = h.shape[0]

    for j in range(n - 2):
        nonzero: np.ndarray = np.flatnonzero(h[j + 1:, j] != 0)

        if len(nonzero) == 0:
            continue

        pivot: int = j + 1 + int(nonzero[0])

        if pivot != j + 1:
            h[[pivot, j + 1], :] = h[[j + 1, pivot], :]
            h[:, [pivot, j + 1]] = h[:, [j + 1, pivot]]

        inverse: int = pow(int(h[j + 1, j]), -1, p)
        factors: np.ndarray = (h[j + 2:, j] * inverse) % p

        if not factors.any():
            continue

        # Row k -= u_k * row (j+1), then column (j+1) += sum_k u_k * column k.
        h[j + 2:, :] = (h[j + 2:, :] - (factors[:, None] * h[j + 1, :]) % p) % p
        h[:, j + 1] = (
            h[:, j + 1] + ((h[:, j + 2:] * factors[None, :]) % p).sum(axis=1)
        ) % p

    return h


def _hessenberg_charpoly_mod(h: np.ndarray, p: int) -> list[int]:
    """
    Characteristic polynomial of an upper Hessenberg matrix over GF(p) by the
    standard recurrence on leading principal submatrices.
    """
    n: int = h.shape[0]
    dtype: type = h.dtype.type if h.dtype != object else object

    # polys[m] holds the characteristic polynomial of the leading m x m block.
    polys: np.ndarray = np.zeros((n + 1, n + 1), dtype=dtype)
    polys[0, 0] = 1

    for m in range(1, n + 1):
        previous: np.ndarray = polys[m - 1]

        # (x - h_mm) p_(m-1)
        current: np.ndarray = np.zeros(n + 1, dtype=dtype)
        current[1:] = previous[:-1]
        current = (current - (int(h[m - 1, m - 1]) * previous) % p) % p

        product: int = 1
        weights: list[int] = []

        for i in range(1, m):
            product = product * int(h[m - i, m - i - 1]) % p

            if product == 0:
                break

            weights.append(product * int(h[m - i - 1, m - 1]) % p)

        if weights:
            rows: np.ndarray = polys[m - 2::-1][:len(weights)]
            column: np.ndarray = np.array(weights, dtype=dtype)[:, None]
            current = (current - ((column * rows) % p).sum(axis=0)) % p

        polys[m] = current

    return [int(c) for c in polys[n]]


def charpoly_mod(matrix: np.ndarray, p: int) -> tuple[int, ...]:
    """
    Coefficients of det(xI - A) mod p, constant term first, for a prime
    p < 2^61. Works for any dimension.
    """
    matrix = _as_square(matrix)

    if not 2 <= p < MAX_MODULUS or not sympy.isprime(p):
        raise ValueError(f'Modulus must be a prime below 2^61, got {p}')

    if matrix.shape[0] == 0:
        return (1,)

    return tuple(
        _hessenberg_charpoly_mod(h=_hessenberg_mod(matrix=matrix, p=p), p=p)
    )


def coefficient_bound(matrix: np.ndarray) -> int:
    """
    Bound on |coefficients| of det(xI - A): the x^(n-k) coefficient is a sum
    of C(n, k) principal k x k minors, each bounded by Hadamard through the
    k largest row norms.
    """
    matrix = _as_square(matrix)
    n: int = matrix.shape[0]

    squared_norms: list[int] = sorted(
        (sum(int(v) * int(v) for v in row) for row in matrix), reverse=True
    )
    norms: list[int] = []

    for squared in squared_norms:
        root: int = math.isqrt(squared)
        norms.append(root if root * root == squared else root + 1)

    bound: int = 1
    product: int = 1

    for k in range(1, n + 1):
        product *= max(norms[k - 1], 1)
        bound = max(bound, math.comb(n, k) * product)

    return bound


def word_primes(bound: int) -> list[int]:
    """
    Largest primes below 2^31 whose product exceeds 2 * bound + 1.
    """
    primes: list[int] = []
    modulus: int = 1
    candidate: int = WORD_PRIME_LIMIT

    while modulus <= 2 * bound + 1:
        candidate = sympy.prevprime(candidate)
        primes.append(candidate)
        modulus *= candidate

    return primes


def random_primes(count: int, seed: int, bits: int = MODULAR_PRIME_BITS) -> list[int]:
    """
    Distinct pseudo-random primes with the given bit size, reproducible from
    the seed.
    """
    rng: np.random.Generator = np.random.default_rng(seed)
    primes: list[int] = []

    while len(primes) < count:
        start: int = (1 << (bits - 1)) + int(
            rng.integers(0, 1 << (bits - 2), dtype=np.int64)
        ) * 2
        prime: int = int(sympy.nextprime(start))

        if prime < (1 << bits) and prime not in primes:
            primes.append(prime)

    return primes


def charpoly(
    matrix: np.ndarray, max_dimension: int = MAX_EXACT_DIMENSION
) -> IntPolynomial:
    """
    Exact monic det(xI - A) of an integer matrix.
    """
    matrix = _as_square(matrix)
    n: int = matrix.shape[0]

    if n > max_dimension:
        raise MatrixTooLargeError(
            f'Exact characteristic polynomial is limited to {max_dimension}'
            f' rows, got {n}; use charpoly_mod for modular verification'
        )

    if n == 0:
        return IntPolynomial.constant(1)

    primes: list[int] = word_primes(coefficient_bound(matrix))
    residues: list[tuple[int, ...]] = [
        charpoly_mod(matrix=matrix, p=p) for p in primes
    ]

    coefficients: list[int] = []

    for k in range(n + 1):
        value: Optional[tuple[int, int]] = crt(
            primes, [r[k] if k < len(r) else 0 for r in residues],
            symmetric=True
        )
        coefficients.append(int(value[0]))

    return IntPolynomial(coefficients=tuple(coefficients))


def charpoly_faddeev_leverrier(
    matrix: np.ndarray, max_dimension: int = FADDEEV_LEVERRIER_LIMIT
) -> IntPolynomial:
    """
    Faddeev-LeVerrier on exact integers, O(n^4); an independent oracle for
    small matrices.
    """
    matrix = _as_square(matrix)
    n: int = matrix.shape[0]

    if n > max_dimension:
        raise MatrixTooLargeError(
            f'Faddeev-LeVerrier is limited to {max_dimension} rows, got {n}'
        )

    a: np.ndarray = np.array(
        [[int(v) for v in row] for row in matrix], dtype=object
    ).reshape(n, n)
    identity: np.ndarray = np.array(
        [[int(i == j) for j in range(n)] for i in range(n)], dtype=object
    ).reshape(n, n)

    coefficients: list[int] = [0] * (n + 1)
    coefficients[n] = 1

    # A M_(k-1), with M_0 = 0
    am: np.ndarray = np.zeros((n, n), dtype=object)

    for k in range(1, n + 1):
        m: np.ndarray = am + coefficients[n - k + 1] * identity
        am = a.dot(m)
        trace: int = int(sum(am[i, i] for i in range(n)))

        # Exact: the trace is always divisible by k for integer matrices.
        coefficients[n - k] = -trace // k

    return IntPolynomial(coefficients=tuple(coefficients))


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """
    Fraction-free Gaussian elimination on Python integers.
    """
    m: list[list[int]] = [[int(v) for v in row] for row in matrix]
    n: int = len(m)

    if n == 0:
        return 1

    sign: int = 1
    previous: int = 1

    for k in range(n - 1):
        if m[k][k] == 0:
            swap: Optional[int] = next(
                (i for i in range(k + 1, n) if m[i][k] != 0), None
            )

            if swap is None:
                return 0

            m[k], m[swap] = m[swap], m[k]
            sign = -sign

        pivot: int = m[k][k]

        for i in range(k + 1, n):
            row: list[int] = m[i]
            factor: int = row[k]

            for j in range(k + 1, n):
                row[j] = (row[j] * pivot - m[k][j] * factor) // previous

            row[k] = 0

        previous = pivot

    return sign * m[n - 1][n - 1]
