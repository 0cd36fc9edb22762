"""Exact lower-triangular matrix algebra.

Everything that drives the polynomial constructions lives on (m+1)x(m+1)
lower-triangular rational matrices: the creation matrix with subdiagonal
1..m, the derivation matrices encoding how the vector derivative acts on
powers of the vector variable, generalized Pascal matrices obtained as
terminating exponentials of the creation matrix, and the transfer matrices
that map the basic sequence onto the Bernoulli, Frobenius-Euler and monic
Hermite families.  Entries are Fractions throughout; nothing here ever
rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rationals import ONE, ZERO, binomial, format_rational, parse_rational


class TriMatrix:
    """Lower-triangular rational matrix, stored as ragged rows.

    Row i holds the i+1 entries (i, 0) .. (i, i); everything above the
    diagonal is identically zero.  Instances are treated as immutable:
    all operations return new matrices.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Fraction]]):
        clean = []
        for i, row in enumerate(rows):
            if len(row) != i + 1:
                raise ValueError(f"row {i} must have {i + 1} entries, got {len(row)}")
            clean.append([Fraction(v) for v in row])
        if not clean:
            raise ValueError("a triangular matrix has at least one row")
        self.rows = clean

    @property
    def order(self) -> int:
        """m, for an (m+1)x(m+1) matrix."""
        return len(self.rows) - 1

    @classmethod
    def zeros(cls, m: int) -> "TriMatrix":
        return cls([[ZERO] * (i + 1) for i in range(m + 1)])

    @classmethod
    def identity(cls, m: int) -> "TriMatrix":
        return cls([[ZERO] * i + [ONE] for i in range(m + 1)])

    @classmethod
    def diagonal(cls, values: Sequence[Fraction]) -> "TriMatrix":
        return cls([[ZERO] * i + [Fraction(values[i])] for i in range(len(values))])

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i <= self.order and 0 <= j <= self.order):
            raise IndexError(f"index {key} out of range for order {self.order}")
        return self.rows[i][j] if j <= i else ZERO

    def __eq__(self, other):
        if not isinstance(other, TriMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.rows))

    def is_zero(self) -> bool:
        return all(not v for row in self.rows for v in row)

    def is_strictly_lower(self) -> bool:
        return all(not row[i] for i, row in enumerate(self.rows))

    def diagonal_entries(self) -> list[Fraction]:
        return [row[i] for i, row in enumerate(self.rows)]

    def subdiagonal(self) -> list[Fraction]:
        return [self.rows[i][i - 1] for i in range(1, self.order + 1)]

    def _require_same_order(self, other: "TriMatrix") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TriMatrix") -> "TriMatrix":
        if not isinstance(other, TriMatrix):
            return NotImplemented
        self._require_same_order(other)
        return TriMatrix(
            [
                [a + b for a, b in zip(row, orow)]
                for row, orow in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "TriMatrix") -> "TriMatrix":
        if not isinstance(other, TriMatrix):
            return NotImplemented
        self._require_same_order(other)
        return TriMatrix(
            [
                [a - b for a, b in zip(row, orow)]
                for row, orow in zip(self.rows, other.rows)
            ]
        )

    def scale(self, factor) -> "TriMatrix":
        factor = Fraction(factor)
        return TriMatrix([[v * factor for v in row] for row in self.rows])

    def __matmul__(self, other: "TriMatrix") -> "TriMatrix":
        """Exact product; the product of lower-triangular matrices is one."""
        if not isinstance(other, TriMatrix):
            return NotImplemented
        self._require_same_order(other)
        out = []
        for i in range(self.order + 1):
            row = []
            for j in range(i + 1):
                acc = ZERO
                for k in range(j, i + 1):
                    a = self.rows[i][k]
                    if a:
                        b = other.rows[k][j]
                        if b:
                            acc += a * b
                row.append(acc)
            out.append(row)
        return TriMatrix(out)

    def apply(self, vector: Sequence) -> list:
        """Matrix action on a vector of ring elements.

        Elements only need addition among themselves and multiplication by
        Fraction scalars, so this works for rationals, multivectors, and
        polynomial objects alike.
        """
        if len(vector) != self.order + 1:
            raise ValueError(
                f"vector length {len(vector)} does not match order {self.order}"
            )
        out = []
        for i in range(self.order + 1):
            acc = None
            for j in range(i + 1):
                entry = self.rows[i][j]
                if entry:
                    contrib = entry * vector[j]
                    acc = contrib if acc is None else acc + contrib
            if acc is None:
                acc = ZERO * vector[i]
            out.append(acc)
        return out

    def power(self, exponent: int) -> "TriMatrix":
        if exponent < 0:
            raise ValueError("only nonnegative matrix powers are defined")
        result = TriMatrix.identity(self.order)
        for _ in range(exponent):
            result = result @ self
        return result

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(format_rational(v) for v in row) for row in self.rows
        )
        return f"TriMatrix[{body}]"

    def to_json(self) -> dict:
        return {
            "m": self.order,
            "rows": [[format_rational(v) for v in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "TriMatrix":
        return cls([[parse_rational(v) for v in row] for row in payload["rows"]])


def creation_matrix(m: int) -> TriMatrix:
    """The nilpotent matrix with subdiagonal 1, 2, ..., m and zeros elsewhere.

    Its action on the coefficient vector of a polynomial sequence is formal
    differentiation, and its terminating exponential generates the Pascal
    matrices.
    """
    if m < 0:
        raise ValueError("order must be nonnegative")
    matrix = TriMatrix.zeros(m)
    for i in range(1, m + 1):
        matrix.rows[i][i - 1] = Fraction(i)
    return matrix


def derivation_matrix(n: int, m: int, shift: int = 0) -> TriMatrix:
    """Matrix of the vector derivative acting on powers of the vector variable.

    Entry (i, i-1) is -(n + i + 2*shift - 1) when i-1 is even and -i when
    i-1 is odd; all other entries vanish.  With shift = 0 this encodes the
    identity (vector derivative of v^k) = -k v^(k-1) for even k and
    -(n+k-1) v^(k-1) for odd k; shift > 0 is the variant for sequences that
    carry a fixed monogenic polynomial factor of degree `shift`.
    In the complex case n = 1, shift = 0 the result is minus the creation
    matrix.
    """
    if n < 1:
        raise ValueError("dimension n must be at least 1")
    if shift < 0:
        raise ValueError("shift must be nonnegative")
    if m < 0:
        raise ValueError("order must be nonnegative")
    matrix = TriMatrix.zeros(m)
    for i in range(1, m + 1):
        j = i - 1
        if j % 2 == 0:
            matrix.rows[i][j] = Fraction(-(n + i + 2 * shift - 1))
        else:
            matrix.rows[i][j] = Fraction(-i)
    return matrix


def nilpotent_exp(matrix: TriMatrix, t: Fraction) -> TriMatrix:
    """exp(t * M) for strictly lower-triangular M; the series terminates.

    M^(m+1) = 0 for an (m+1)x(m+1) strictly lower-triangular matrix, so the
    exponential is the exact finite sum of t^k M^k / k! for k = 0..m.
    """
    if not matrix.is_strictly_lower():
        raise ValueError("nilpotent_exp requires a zero diagonal")
    t = Fraction(t)
    m = matrix.order
    scaled = matrix.scale(t)
    result = TriMatrix.identity(m)
    term = TriMatrix.identity(m)
    for k in range(1, m + 1):
        term = (term @ scaled).scale(Fraction(1, k))
        if term.is_zero():
            break
        result = result + term
    return result


def pascal_matrix(x0: Fraction, m: int) -> TriMatrix:
    """Generalized Pascal matrix with entries C(i, j) * x0^(i-j).

    Equals the exponential of x0 times the creation matrix, and satisfies
    the semigroup law P(a) P(b) = P(a+b).
    """
    x0 = Fraction(x0)
    powers = [ONE]
    for _ in range(m):
        powers.append(powers[-1] * x0)
    return TriMatrix(
        [[binomial(i, j) * powers[i - j] for j in range(i + 1)] for i in range(m + 1)]
    )


def tri_inverse(matrix: TriMatrix) -> TriMatrix:
    """Exact inverse of a lower-triangular matrix by forward substitution."""
    m = matrix.order
    for i, d in enumerate(matrix.diagonal_entries()):
        if not d:
            raise ZeroDivisionError(f"singular matrix: zero diagonal entry at {i}")
    inv = TriMatrix.zeros(m)
    for j in range(m + 1):
        inv.rows[j][j] = ONE / matrix.rows[j][j]
        for i in range(j + 1, m + 1):
            acc = ZERO
            for k in range(j, i):
                a = matrix.rows[i][k]
                if a:
                    acc += a * inv.rows[k][j]
            inv.rows[i][j] = -acc / matrix.rows[i][i]
    return inv


def bernoulli_transfer(m: int) -> TriMatrix:
    """Transfer matrix of the generalized Bernoulli sequence.

    The inverse of sum_{k=0..m} H^k / (k+1)! where H is the creation
    matrix; its first column carries the Bernoulli numbers.
    """
    h = creation_matrix(m)
    series = TriMatrix.identity(m).scale(Fraction(1, 1))
    term = TriMatrix.identity(m)
    factorial = 1
    for k in range(1, m + 1):
        term = term @ h
        factorial *= k + 1
        series = series + term.scale(Fraction(1, factorial))
    return tri_inverse(series)


def frobenius_euler_transfer(lam: Fraction, m: int) -> TriMatrix:
    """Transfer matrix (1 - lam) (P - lam I)^{-1} with P the Pascal matrix at 1.

    Every eigenvalue of P equals 1, so any rational lam != 1 is admissible.
    """
    lam = Fraction(lam)
    if lam == 1:
        raise ZeroDivisionError("lambda = 1 makes the transfer matrix singular")
    shifted = pascal_matrix(ONE, m) - TriMatrix.identity(m).scale(lam)
    return tri_inverse(shifted).scale(ONE - lam)


def euler_transfer(m: int) -> TriMatrix:
    """Transfer matrix of the generalized Euler sequence: 2 (P + I)^{-1}."""
    return frobenius_euler_transfer(Fraction(-1), m)


def hermite_transfer(m: int) -> TriMatrix:
    """Transfer matrix of the monic Hermite sequence.

    The terminating series sum_k (-H^2)^k / (2^(2k) k!) with H the creation
    matrix, i.e. exp(-H^2/4).
    """
    h = creation_matrix(m)
    h2 = h @ h
    result = TriMatrix.identity(m)
    term = TriMatrix.identity(m)
    for k in range(1, m // 2 + 1):
        term = (term @ h2).scale(Fraction(-1, 4 * k))
        if term.is_zero():
            break
        result = result + term
    return result
