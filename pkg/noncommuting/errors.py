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

from typing import Any


class GroupSpecError(ValueError):
    """
    Custom exception to indicate a group descriptor that cannot be parsed or
    a constructor argument outside the supported range.
    """

    pass


class ConfigError(ValueError):
    """
    Custom exception to indicate invalid run configuration (tolerance, primes
    count, vertex cap, jobs).
    """

    pass


class VertexCapError(RuntimeError):
    """
    Custom exception to indicate that a group or graph exceeds the configured
    vertex cap.
    """

    pass


class MatrixTooLargeError(RuntimeError):
    """
    Custom exception to indicate that an exact characteristic polynomial was
    requested for a matrix above the exact dimension cap. Reduction modulo
    primes (charpoly_mod) still works for such matrices.
    """

    pass


class NotSymmetricError(ValueError):
    """
    Custom exception to indicate a non-symmetric matrix handed to the
    symmetric eigensolver.
    """

    pass


class FactorMismatchError(ArithmeticError):
    """
    Custom exception to indicate that a claimed factor does not divide a
    polynomial exactly. The non-zero remainder is kept for the report, since
    this usually means a closed form is wrong rather than the code.
    """

    def __init__(self, message: str, remainder: Any) -> None:
        super().__init__(message)

        self.remainder = remainder


class DiscriminantError(ArithmeticError):
    """
    Custom exception to indicate a cubic whose discriminant does not give
    three distinct real roots.
    """

    pass


class GroupAxiomError(RuntimeError):
    """
    Custom exception to indicate a multiplication law that is not a group law
    (associativity, identity or inverses fail).
    """

    pass
