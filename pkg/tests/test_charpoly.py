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

import numpy as np
import pytest

from noncommuting.charpoly import (
    bareiss_determinant,
    charpoly,
    charpoly_faddeev_leverrier,
    charpoly_mod,
    coefficient_bound,
    random_primes,
    word_primes
)
from noncommuting.errors import MatrixTooLargeError
from noncommuting.graphs import laplacian, noncommuting_graph
from noncommuting.groups import make_dihedral, make_symmetric
from noncommuting.polynomials import IntPolynomial

X = IntPolynomial.x()


@pytest.fixture(scope='module')
def random_symmetric() -> np.ndarray:
    rng = np.random.default_rng(7)
    matrix = rng.integers(-5, 6, size=(12, 12))

    return matrix + matrix.T


def test_d8_graph():
    graph = noncommuting_graph(make_dihedral(4))

    assert charpoly(graph.adjacency) == X ** 3 * (X - 4) * (X + 2) ** 2


def test_d6_graph():
    graph = noncommuting_graph(make_dihedral(3))

    # x^5 - 9x^3 - 14x^2 - 6x, traceless as every adjacency polynomial is
    assert charpoly(graph.adjacency) == IntPolynomial(
        coefficients=(0, -6, -14, -9, 0, 1)
    )


@pytest.mark.parametrize('n', [3, 4, 5, 6, 8])
def test_agrees_with_faddeev_leverrier(n):
    graph = noncommuting_graph(make_dihedral(n))

    assert charpoly(graph.adjacency) == charpoly_faddeev_leverrier(graph.adjacency)
    assert charpoly(laplacian(graph).matrix) == charpoly_faddeev_leverrier(
        laplacian(graph).matrix
    )


def test_random_symmetric_matrix(random_symmetric):
    assert charpoly(random_symmetric) == charpoly_faddeev_leverrier(random_symmetric)


def test_modular_agrees_with_exact(random_symmetric):
    exact = charpoly(random_symmetric)

    for p in [101, 2 ** 31 - 1, *random_primes(count=2, seed=3)]:
        assert charpoly_mod(matrix=random_symmetric, p=p) == exact.reduce_mod(p)


def test_empty_matrix():
    assert charpoly(np.zeros((0, 0), dtype=np.int64)) == IntPolynomial.constant(1)
    assert charpoly_mod(matrix=np.zeros((0, 0), dtype=np.int64), p=7) == (1,)


def test_exact_dimension_limit():
    graph = noncommuting_graph(make_symmetric(4))

    with pytest.raises(MatrixTooLargeError):
        charpoly(graph.adjacency, max_dimension=10)

    with pytest.raises(MatrixTooLargeError):
        charpoly_faddeev_leverrier(graph.adjacency, max_dimension=10)


@pytest.mark.parametrize('p', [1, 4, 2 ** 61 + 1])
def test_bad_modulus(p):
    with pytest.raises(ValueError):
        charpoly_mod(matrix=np.eye(2, dtype=np.int64), p=p)


def test_non_square_matrix():
    with pytest.raises(ValueError):
        charpoly(np.zeros((2, 3), dtype=np.int64))


@pytest.mark.parametrize(
    'matrix, determinant',
    [
        ([[2, 1], [1, 3]], 5),
        ([[0, 1], [1, 0]], -1),
        ([[1, 2], [2, 4]], 0),
        ([[2, 0, 0], [0, 3, 0], [0, 0, 4]], 24),
        ([], 1)
    ]
)
def test_bareiss_determinant(matrix, determinant):
    assert bareiss_determinant(matrix) == determinant


def test_coefficient_bound(random_symmetric):
    bound = coefficient_bound(random_symmetric)

    assert all(abs(c) <= bound for c in charpoly(random_symmetric).coefficients)


def test_word_primes_cover_bound():
    bound = 10 ** 30
    primes = word_primes(bound)

    assert math.prod(primes) > 2 * bound + 1
    assert all(p < 2 ** 31 for p in primes)


def test_random_primes_are_reproducible():
    primes = random_primes(count=3, seed=11)

    assert primes == random_primes(count=3, seed=11)
    assert len(set(primes)) == 3
    assert all(p.bit_length() == 60 for p in primes)
