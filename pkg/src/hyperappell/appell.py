"""Construction of hypercomplex Appell polynomial sequences.

The basic sequence of degree k polynomials has the binary form

    phi_k(x) = sum_{j=0..k} C(k,j) c_j  x0^(k-j) v^j,

where x = x0 + v splits a paravector into scalar and vector part and the
diagonal coefficients c_j are fixed (up to the free choice of c_0) by the
requirement that every phi_k lie in the kernel of the generalized
Cauchy-Riemann operator.  The working constraint is the recurrence

    c_{2k} = c_{2k-1},      c_{2k-1} = (2k-1) / (n + 2k + 2s - 2) * c_{2k-2},

whose closed form is c_{2k} = (2k-1)!! (n+2s-2)!! / (n+2k+2s-2)!! * c_0
(s = 0 is the plain case; s > 0 belongs to sequences carrying an opaque
monogenic factor of degree s and is kept at the coefficient level only).

Vectorized, the whole truncated sequence is exp(H x0) D_c xi(v) with H the
creation matrix, D_c the diagonal of the c_j and xi(v) the column of vector
powers; classical families (Bernoulli, Euler, Frobenius-Euler, Hermite)
arise by applying their transfer matrices f(H) to the basic sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .clifford import Multivector, Paravector, vector_power
from .polynomials import CliffordPoly
from .rationals import ONE, ZERO, binomial, double_factorial, format_rational, parse_rational
from .trimatrix import (
    TriMatrix,
    bernoulli_transfer,
    euler_transfer,
    frobenius_euler_transfer,
    hermite_transfer,
)

FAMILIES = ("canonical", "bernoulli", "euler", "frobenius-euler", "hermite")


@dataclass(frozen=True)
class CoeffSequence:
    """Diagonal coefficients c_0..c_m for dimension n and factor degree s.

    The builder enforces the defining constraint; constructing instances
    directly bypasses it (used deliberately for negative controls).
    """

    n: int
    shift: int
    values: tuple[Fraction, ...]

    @property
    def m(self) -> int:
        return len(self.values) - 1

    def diagonal_matrix(self) -> TriMatrix:
        return TriMatrix.diagonal(self.values)

    def with_value(self, k: int, value) -> "CoeffSequence":
        """Copy with entry k replaced; does not re-impose the constraint."""
        values = list(self.values)
        values[k] = Fraction(value)
        return CoeffSequence(self.n, self.shift, tuple(values))


def closed_form_coefficient(n: int, k: int, c0: Fraction = ONE, shift: int = 0) -> Fraction:
    """c_k by the double-factorial formula (valid for all n >= 1).

    c_{2r} = c_{2r-1} = (2r-1)!! (n+2s-2)!! / (n+2r+2s-2)!! * c_0.
    """
    if k == 0:
        return Fraction(c0)
    r = (k + 1) // 2
    num = double_factorial(2 * r - 1) * double_factorial(n + 2 * shift - 2)
    den = double_factorial(n + 2 * r + 2 * shift - 2)
    return Fraction(num, den) * Fraction(c0)


def coefficient_sequence(
    n: int, m: int, c0: Fraction = ONE, shift: int = 0
) -> CoeffSequence:
    """Coefficients c_0..c_m making the degree ladder monogenic.

    Built by the recurrence, which covers n = 1 (all entries equal c_0,
    the complex case) and n > 1 uniformly; the closed form above gives the
    same values.
    """
    if n < 1:
        raise ValueError("dimension n must be at least 1")
    if m < 0:
        raise ValueError("maximum degree must be nonnegative")
    if shift < 0:
        raise ValueError("shift must be nonnegative")
    c0 = Fraction(c0)
    if not c0:
        raise ValueError("c0 must be nonzero: the diagonal matrix must be invertible")
    values = [c0]
    for k in range(1, m + 1):
        if k % 2 == 1:
            # k = 2r-1: denominator n + 2r + 2s - 2 = n + k + 2s - 1
            values.append(values[-1] * Fraction(k, n + k + 2 * shift - 1))
        else:
            values.append(values[-1])
    for k, value in enumerate(values):
        if value != closed_form_coefficient(n, k, c0=c0, shift=shift):
            raise RuntimeError(
                f"recurrence and closed form disagree at k={k} (n={n}, s={shift})"
            )
    return CoeffSequence(n, shift, tuple(values))


def canonical_coeffs(n: int, m: int, c0: Fraction = ONE) -> CoeffSequence:
    return coefficient_sequence(n, m, c0=c0)


def shifted_coeffs(n: int, s: int, m: int, c0: Fraction = ONE) -> CoeffSequence:
    return coefficient_sequence(n, m, c0=c0, shift=s)


class AppellPoly:
    """One sequence member in binary form.

    Terms map (i, j) to the rational coefficient of x0^i v^j, where v is
    the vector part of the paravector argument.  Members of the basic
    sequence are homogeneous (i + j = degree for every term); transfer
    matrices mix degrees, so lower-order terms appear for the classical
    families.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[tuple[int, int], Fraction] | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.degree = degree
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (i, j), coeff in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in term ({i}, {j})")
                value = Fraction(coeff)
                if value:
                    clean[(i, j)] = value
        self.terms = clean

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, AppellPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            total = out.get(key, ZERO) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        result = AppellPoly(max(self.degree, other.degree))
        result.terms = out
        return result

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scale = Fraction(other)
            result = AppellPoly(self.degree)
            if scale:
                result.terms = {k: c * scale for k, c in self.terms.items()}
            return result
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AppellPoly):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Terms ordered by total degree, then vector exponent."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0][1]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), coeff in self.sorted_terms():
            factors = []
            if abs(coeff) != 1 or (i == 0 and j == 0):
                factors.append(format_rational(abs(coeff)))
            if i:
                factors.append("x0" if i == 1 else f"x0^{i}")
            if j:
                factors.append("xv" if j == 1 else f"xv^{j}")
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, "*".join(factors)))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"AppellPoly(degree={self.degree}, {self})"


@dataclass
class AppellSequence:
    """Degrees 0..m of an Appell sequence over Cl(0,n), in binary form."""

    n: int
    family: str
    polys: list[AppellPoly]
    coeffs: CoeffSequence
    lam: Fraction | None = None
    shift: int = 0

    @property
    def m(self) -> int:
        return len(self.polys) - 1

    def eval_at(self, x: Paravector) -> list[Multivector]:
        if x.n != self.n:
            raise ValueError(f"point has dimension {x.n}, sequence has {self.n}")
        return [eval_poly(p, x) for p in self.polys]

    def restrict_real(self) -> list[list[Fraction]]:
        """Set the vector part to zero; ascending x0 coefficients per degree."""
        return [restrict_poly(p) for p in self.polys]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "lambda": None if self.lam is None else format_rational(self.lam),
            "s": self.shift,
            "m": self.m,
            "coeffs": [format_rational(c) for c in self.coeffs.values],
            "polys": [
                {
                    "k": k,
                    "terms": [
                        {"i": i, "j": j, "a": format_rational(a)}
                        for (i, j), a in poly.sorted_terms()
                    ],
                }
                for k, poly in enumerate(self.polys)
            ],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "AppellSequence":
        n = int(payload["n"])
        shift = int(payload.get("s", 0))
        lam = payload.get("lambda")
        coeffs = CoeffSequence(
            n, shift, tuple(parse_rational(c) for c in payload["coeffs"])
        )
        polys = []
        for entry in sorted(payload["polys"], key=lambda e: int(e["k"])):
            k = int(entry["k"])
            if k != len(polys):
                raise ValueError(f"polynomial degrees must cover 0..m, missing {len(polys)}")
            terms = {}
            for term in entry["terms"]:
                key = (int(term["i"]), int(term["j"]))
                terms[key] = terms.get(key, ZERO) + parse_rational(term["a"])
            polys.append(AppellPoly(k, terms))
        if not polys:
            raise ValueError("sequence must contain at least degree 0")
        return cls(
            n=n,
            family=str(payload["family"]),
            polys=polys,
            coeffs=coeffs,
            lam=None if lam is None else parse_rational(lam),
            shift=shift,
        )

    def csv_rows(self) -> Iterator[tuple[int, int, int, str]]:
        """One (k, i, j, a) row per stored term."""
        for k, poly in enumerate(self.polys):
            for (i, j), a in poly.sorted_terms():
                yield k, i, j, format_rational(a)


def build_phi(coeffs: CoeffSequence, m: int | None = None) -> AppellSequence:
    """Basic sequence phi_k = sum_j C(k,j) c_j x0^(k-j) v^j for k = 0..m."""
    if m is None:
        m = coeffs.m
    if m > coeffs.m:
        raise ValueError(f"coefficients cover degrees 0..{coeffs.m}, need 0..{m}")
    polys = []
    for k in range(m + 1):
        terms = {
            (k - j, j): binomial(k, j) * coeffs.values[j] for j in range(k + 1)
        }
        polys.append(AppellPoly(k, terms))
    trimmed = CoeffSequence(coeffs.n, coeffs.shift, coeffs.values[: m + 1])
    return AppellSequence(
        n=coeffs.n,
        family="canonical",
        polys=polys,
        coeffs=trimmed,
        shift=coeffs.shift,
    )


def apply_transfer(
    transfer: TriMatrix,
    base: AppellSequence,
    family: str = "custom",
    lam: Fraction | None = None,
) -> AppellSequence:
    """New sequence with polys[k] = sum_j T[k][j] * base.polys[j]."""
    if transfer.order != base.m:
        raise ValueError(
            f"transfer order {transfer.order} does not match sequence length {base.m}"
        )
    return AppellSequence(
        n=base.n,
        family=family,
        polys=transfer.apply(base.polys),
        coeffs=base.coeffs,
        lam=lam,
        shift=base.shift,
    )


def build_family(
    n: int,
    m: int,
    family: str = "canonical",
    c0: Fraction = ONE,
    lam: Fraction | None = None,
    shift: int = 0,
) -> AppellSequence:
    """Construct a named sequence: the basic one, or a transfer applied to it."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if shift > 0 and family != "canonical":
        raise ValueError("shifted coefficients are only defined for the canonical family")
    base = build_phi(coefficient_sequence(n, m, c0=c0, shift=shift))
    if family == "canonical":
        return base
    if family == "bernoulli":
        return apply_transfer(bernoulli_transfer(m), base, family)
    if family == "euler":
        return apply_transfer(euler_transfer(m), base, family)
    if family == "hermite":
        return apply_transfer(hermite_transfer(m), base, family)
    if lam is None:
        raise ValueError("frobenius-euler requires a lambda parameter")
    return apply_transfer(
        frobenius_euler_transfer(lam, m), base, "frobenius-euler", lam=Fraction(lam)
    )


def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def vector_power_expansion(n: int, j: int) -> CliffordPoly:
    """The j-th power of the vector variable as an explicit polynomial.

    Even powers expand (-(x1^2 + ... + xn^2))^(j/2) multinomially into
    scalar monomials; odd powers carry one extra factor x_k e_k.
    """
    if n < 1:
        raise ValueError("dimension n must be at least 1")
    if j < 0:
        raise ValueError("exponent must be nonnegative")
    half = j // 2
    sign = ONE if half % 2 == 0 else -ONE
    terms: dict[tuple[int, ...], Multivector] = {}
    for combo in _weak_compositions(half, n):
        weight = math.factorial(half)
        for part in combo:
            weight //= math.factorial(part)
        coeff = sign * weight
        exps_vec = tuple(2 * b for b in combo)
        if j % 2 == 0:
            exps = (0,) + exps_vec
            prior = terms.get(exps)
            mv = Multivector.scalar(n, coeff)
            terms[exps] = mv if prior is None else prior + mv
        else:
            for k in range(1, n + 1):
                exps = (0,) + tuple(
                    e + (1 if idx == k else 0)
                    for idx, e in enumerate(exps_vec, start=1)
                )
                mv = Multivector.generator(n, k) * coeff
                prior = terms.get(exps)
                terms[exps] = mv if prior is None else prior + mv
    return CliffordPoly(n, terms)


def expand_multivariate(poly: AppellPoly, n: int) -> CliffordPoly:
    """Binary form to full multivariate form over x0..xn."""
    acc = CliffordPoly.zero(n)
    for (i, j), a in poly.terms.items():
        block = vector_power_expansion(n, j)
        shifted = {
            (i,) + exps[1:]: coeff * a for exps, coeff in block.terms.items()
        }
        acc = acc + CliffordPoly(n, shifted)
    return acc


def expand_sequence(seq: AppellSequence) -> list[CliffordPoly]:
    return [expand_multivariate(p, seq.n) for p in seq.polys]


def eval_poly(poly: AppellPoly, x: Paravector) -> Multivector:
    """Exact value sum_{(i,j)} a_{ij} x0^i v^j at a rational paravector."""
    vec_only = Paravector(ZERO, x.vec)
    acc = Multivector.zero(x.n)
    for (i, j), a in poly.terms.items():
        scale = a * x.x0**i
        if scale:
            acc = acc + vector_power(vec_only, j) * scale
    return acc


def restrict_poly(poly: AppellPoly) -> list[Fraction]:
    """Coefficients in x0 (ascending) after setting the vector part to zero."""
    degree = max((i for (i, j) in poly.terms if j == 0), default=0)
    out = [ZERO] * (degree + 1)
    for (i, j), a in poly.terms.items():
        if j == 0:
            out[i] = a
    return out


def exp_truncated(x: Paravector, order: int) -> Multivector:
    """Truncation of the generalized exponential: sum_{k<=order} phi_k(x) / k!.

    Uses the basic sequence normalized to c_0 = 1.  On the real line
    (zero vector part) this reduces to the truncated real exponential
    series; for n = 1 it reproduces truncated complex exponentials.
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    seq = build_phi(coefficient_sequence(x.n, order))
    acc = Multivector.zero(x.n)
    factorial = 1
    for k, poly in enumerate(seq.polys):
        if k:
            factorial *= k
        acc = acc + eval_poly(poly, x) * Fraction(1, factorial)
    return acc
