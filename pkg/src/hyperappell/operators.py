"""Hypercomplex differential operators and symbolic certification.

The generalized Cauchy-Riemann operator and its conjugate are

    D  = (d/dx0 + Dv) / 2,        D* = (d/dx0 - Dv) / 2,

with Dv = sum_k e_k d/dx_k the vector derivative.  A polynomial is
monogenic when D annihilates it, and a monogenic sequence is Appell when
D* acts as degree lowering: D* p_k = k p_{k-1}.  Both statements are
decided here exactly, by expanding sequence members into multivariate
polynomials with multivector coefficients and checking that the residuals
vanish identically.  A failing degree is reported with a concrete witness
monomial, so negative controls produce usable evidence instead of a bare
boolean.

Coefficient-level identities live alongside: the vector derivative acts on
the column of vector powers through a one-subdiagonal matrix, and the
defining coefficient constraint is equivalent to an anticommutation
relation between the creation matrix and that subdiagonal matrix weighted
by the coefficient diagonal.  The latter is checked by two independent
routes (matrix arithmetic and the per-entry pattern) that must agree.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .appell import AppellSequence, CoeffSequence, expand_multivariate, vector_power_expansion
from .clifford import Multivector
from .polynomials import CliffordPoly
from .trimatrix import TriMatrix, creation_matrix, derivation_matrix

HALF = Fraction(1, 2)


def partial_x0(poly: CliffordPoly) -> CliffordPoly:
    return poly.partial(0)


def dirac(poly: CliffordPoly) -> CliffordPoly:
    """Vector derivative sum_k e_k d(poly)/dx_k, with e_k acting from the left."""
    acc = CliffordPoly.zero(poly.n)
    for k in range(1, poly.n + 1):
        ek = Multivector.generator(poly.n, k)
        acc = acc + poly.partial(k).map_coefficients(lambda c, ek=ek: ek * c)
    return acc


def cr(poly: CliffordPoly) -> CliffordPoly:
    """Conjugate generalized Cauchy-Riemann operator, (d/dx0 - Dv)/2."""
    return (partial_x0(poly) - dirac(poly)) * HALF


def cr_bar(poly: CliffordPoly) -> CliffordPoly:
    """Generalized Cauchy-Riemann operator, (d/dx0 + Dv)/2."""
    return (partial_x0(poly) + dirac(poly)) * HALF


def _witness(residual: CliffordPoly) -> dict:
    exps, coeff = residual.leading_term()
    return {"exponents": list(exps), "coeff": coeff.to_json()}


@dataclass(frozen=True)
class DegreeCheck:
    """Outcome at one degree; a None field means the check was not run."""

    k: int
    monogenic: bool | None = None
    ladder: bool | None = None
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.monogenic is not False and self.ladder is not False

    def merge(self, other: "DegreeCheck") -> "DegreeCheck":
        if other.k != self.k:
            raise ValueError("cannot merge checks for different degrees")
        return DegreeCheck(
            k=self.k,
            monogenic=self.monogenic if other.monogenic is None else other.monogenic,
            ladder=self.ladder if other.ladder is None else other.ladder,
            witness=self.witness if self.witness is not None else other.witness,
        )

    def to_json(self) -> dict:
        out: dict = {"k": self.k}
        if self.monogenic is not None:
            out["monogenic"] = self.monogenic
        if self.ladder is not None:
            out["ladder"] = self.ladder
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class VerifyReport:
    """Per-degree certification results for one sequence."""

    n: int
    family: str
    results: list[DegreeCheck]
    intertwining: bool | None = None
    shift: int = 0

    @property
    def ok(self) -> bool:
        if self.intertwining is False:
            return False
        return all(r.passed for r in self.results)

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        if (self.n, self.family, self.shift) != (other.n, other.family, other.shift):
            raise ValueError("cannot merge reports for different sequences")
        if len(self.results) != len(other.results):
            raise ValueError("cannot merge reports covering different degrees")
        return VerifyReport(
            n=self.n,
            family=self.family,
            results=[a.merge(b) for a, b in zip(self.results, other.results)],
            intertwining=self.intertwining if other.intertwining is None else other.intertwining,
            shift=self.shift,
        )

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "family": self.family,
            "s": self.shift,
            "ok": self.ok,
            "results": [r.to_json() for r in self.results],
        }
        if self.intertwining is not None:
            out["intertwining"] = self.intertwining
        return out


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("HYPERAPPELL_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"HYPERAPPELL_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _expand_all(seq: AppellSequence, threads: int | None) -> list[CliffordPoly]:
    count = min(_thread_count(threads), len(seq.polys))
    if count <= 1:
        return [expand_multivariate(p, seq.n) for p in seq.polys]
    with ThreadPoolExecutor(max_workers=count) as pool:
        # map preserves argument order, so results are independent of the
        # thread count even though completion order is not.
        return list(pool.map(lambda p: expand_multivariate(p, seq.n), seq.polys))


def check_monogenic(seq: AppellSequence, threads: int | None = None) -> VerifyReport:
    """D p_k = 0 for every degree, with a witness monomial on failure."""
    expanded = _expand_all(seq, threads)
    results = []
    for k, poly in enumerate(expanded):
        residual = cr_bar(poly)
        if residual.is_zero():
            results.append(DegreeCheck(k, monogenic=True))
        else:
            results.append(DegreeCheck(k, monogenic=False, witness=_witness(residual)))
    return VerifyReport(n=seq.n, family=seq.family, results=results, shift=seq.shift)


def check_appell(seq: AppellSequence, threads: int | None = None) -> VerifyReport:
    """D* p_k = k p_{k-1} for every degree; degree 0 holds vacuously."""
    expanded = _expand_all(seq, threads)
    results = [DegreeCheck(0, ladder=True)]
    for k in range(1, len(expanded)):
        residual = cr(expanded[k]) - expanded[k - 1] * Fraction(k)
        if residual.is_zero():
            results.append(DegreeCheck(k, ladder=True))
        else:
            results.append(DegreeCheck(k, ladder=False, witness=_witness(residual)))
    return VerifyReport(n=seq.n, family=seq.family, results=results, shift=seq.shift)


def check_xi_derivation(n: int, m: int) -> bool:
    """Dv applied to the column of vector powers matches the matrix action.

    Row j of the derivation matrix has a single entry at j-1, so the check
    compares Dv v^j against that entry times v^(j-1), as polynomials.
    """
    matrix = derivation_matrix(n, m)
    for j in range(m + 1):
        derived = dirac(vector_power_expansion(n, j))
        expected = CliffordPoly.zero(n)
        if j:
            expected = vector_power_expansion(n, j - 1) * matrix[j, j - 1]
        if derived != expected:
            return False
    return True


def check_intertwining(n: int, s: int, m: int, coeffs: CoeffSequence) -> bool:
    """H D_c + D_c Ht = 0, decided by two routes that must agree.

    The matrix route multiplies out the left side; the entry route checks
    the equivalent scalar pattern (j+1) c_j = (n+j+2s) c_{j+1} for even j
    and c_j = c_{j+1} for odd j.  A disagreement would mean a bug in the
    matrix layer rather than a property failure, so it raises.
    """
    if coeffs.n != n or coeffs.shift != s:
        raise ValueError(
            f"coefficients were built for (n={coeffs.n}, s={coeffs.shift}), "
            f"not (n={n}, s={s})"
        )
    if coeffs.m < m:
        raise ValueError(f"coefficients cover degrees 0..{coeffs.m}, need 0..{m}")
    values = coeffs.values[: m + 1]
    diag = TriMatrix.diagonal(values)
    h = creation_matrix(m)
    ht = derivation_matrix(n, m, shift=s)
    matrix_route = (h @ diag + diag @ ht).is_zero()

    entry_route = True
    for j in range(m):
        lhs = (j + 1) * values[j]
        if j % 2 == 0:
            rhs = (n + j + 2 * s) * values[j + 1]
        else:
            rhs = (j + 1) * values[j + 1]
        if lhs != rhs:
            entry_route = False
            break

    if matrix_route != entry_route:
        raise RuntimeError(
            "intertwining routes disagree: matrix says "
            f"{matrix_route}, entry pattern says {entry_route}"
        )
    return matrix_route


def certify(seq: AppellSequence, threads: int | None = None) -> VerifyReport:
    """Full certificate: monogenicity, ladder, and the coefficient identity.

    Sequences with a positive shift are coefficient skeletons of products
    with an extra monogenic factor that is not represented here; only the
    intertwining identity applies to them, so the per-degree expansion
    checks are skipped.
    """
    intertwining = check_intertwining(seq.n, seq.shift, seq.m, seq.coeffs)
    if seq.shift > 0:
        return VerifyReport(
            n=seq.n,
            family=seq.family,
            results=[],
            intertwining=intertwining,
            shift=seq.shift,
        )
    report = check_monogenic(seq, threads).merge(check_appell(seq, threads))
    return VerifyReport(
        n=report.n,
        family=report.family,
        results=report.results,
        intertwining=intertwining,
        shift=report.shift,
    )
