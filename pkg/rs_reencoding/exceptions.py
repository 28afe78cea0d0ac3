# Copyright 2024 The rs-reencoding Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"). You
# may not use this file except in compliance with the License. A copy of
# the License is located at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# or in the "license" file accompanying this file. This file is
# distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF
# ANY KIND, either express or implied. See the License for the specific
# language governing permissions and limitations under the License.


class ReedSolomonError(Exception):
    """Base Error for the rs-reencoding package"""


class FieldError(ReedSolomonError):
    """Base error for finite field construction"""


class UnsupportedDegree(FieldError):
    def __init__(self, m):
        self.m: int = m
        super().__init__(
            f"Extension degree m={m} is outside the supported range [2, 16]"
        )


class ReducibleModulus(FieldError):
    def __init__(self, modulus):
        self.modulus: int = modulus
        super().__init__(f"Modulus 0x{modulus:x} is not an irreducible polynomial")


class NonPrimitiveModulus(FieldError):
    def __init__(self, modulus, order):
        self.modulus: int = modulus
        self.order: int = order
        super().__init__(
            f"x has multiplicative order {order} modulo 0x{modulus:x}, "
            f"log tables need a primitive modulus"
        )


class DivisionByZero(ReedSolomonError, ZeroDivisionError):
    """Inversion of the zero element or division by the zero polynomial"""


class PolynomialError(ReedSolomonError):
    """Base error for polynomial arithmetic"""


class InexactDivision(PolynomialError):
    def __init__(self, remainder):
        self.remainder = remainder
        super().__init__(f"Division leaves a nonzero remainder: {remainder!r}")


class DuplicateAbscissa(PolynomialError):
    def __init__(self, x):
        self.x: int = x
        super().__init__(f"Abscissa 0x{x:x} appears more than once")


class ZeroPolynomial(PolynomialError):
    """Operation is undefined on the zero polynomial"""


class InterpolationError(ReedSolomonError):
    """Base error for bivariate interpolation"""


class NotSolvable(InterpolationError):
    def __init__(self, constraints, unknowns):
        self.constraints: int = constraints
        self.unknowns: int = unknowns
        super().__init__(
            f"Problem has {unknowns} unknowns for {constraints} constraints, "
            f"a nonzero solution is only guaranteed when unknowns > constraints"
        )


class NoSolution(InterpolationError):
    """The engine finished without a candidate meeting the degree bounds"""


class VerificationMismatch(InterpolationError):
    """Pointwise and divisibility verification disagree"""


class ReencodingError(ReedSolomonError):
    """Base error for the re-encoding transformation"""


class MultiplicityTooSmall(ReencodingError):
    def __init__(self, s, ell):
        self.s: int = s
        self.ell: int = ell
        super().__init__(
            "Point reduction needs multiplicity s >= Y-degree, "
            f"got s={s}, Y-degree={ell}"
        )


class DecodingError(ReedSolomonError):
    """Base error for encoders and decoders"""


class BadDimension(DecodingError):
    """Code length, dimension or word length are inconsistent"""


class MessageTooLong(DecodingError):
    def __init__(self, degree, k):
        self.degree = degree
        self.k: int = k
        super().__init__(f"Message of degree {degree} does not fit dimension k={k}")


class DecodingFailure(DecodingError):
    def __init__(self, reason):
        self.reason: str = reason
        super().__init__(f"Decoding failed: {reason}")


class RadiusInfeasible(DecodingError):
    def __init__(self, radius, detail=""):
        self.radius: int = radius
        message = f"No interpolation parameters reach decoding radius T={radius}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class BenchmarkError(ReedSolomonError):
    """Base error for the benchmark harness"""


class BadWeight(BenchmarkError):
    def __init__(self, weight, n):
        self.weight: int = weight
        self.n: int = n
        super().__init__(f"Error weight {weight} is outside [0, {n}]")


class InvalidConfig(BenchmarkError):
    """Encountered an issue validating a benchmark configuration"""


class CellFailure(BenchmarkError):
    def __init__(self, seed, m, k, engine, mode, trial):
        self.seed: int = seed
        self.m: int = m
        self.k: int = k
        self.engine: str = engine
        self.mode: str = mode
        self.trial: int = trial
        super().__init__(
            f"Wrong decode in cell m={m} k={k} engine={engine} mode={mode} "
            f"trial={trial} (seed={seed})"
        )

    def __reduce__(self):
        return (
            CellFailure,
            (self.seed, self.m, self.k, self.engine, self.mode, self.trial),
        )


class OracleMismatch(BenchmarkError):
    def __init__(self, engine, mode, message, errors):
        self.engine: str = engine
        self.mode: str = mode
        self.message = message
        self.errors = errors
        super().__init__(
            f"{engine}/{mode} failed to recover {message!r} "
            f"under error pattern {errors!r}"
        )
