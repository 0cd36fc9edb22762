import json
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperappell.appell import (
    AppellPoly,
    AppellSequence,
    apply_transfer,
    build_family,
    build_phi,
    canonical_coeffs,
    closed_form_coefficient,
    coefficient_sequence,
    eval_poly,
    exp_truncated,
    expand_multivariate,
    restrict_poly,
    shifted_coeffs,
    vector_power_expansion,
)
from hyperappell.clifford import Multivector, Paravector
from hyperappell.polynomials import CliffordPoly
from hyperappell.trimatrix import TriMatrix, bernoulli_transfer, creation_matrix, nilpotent_exp

from oracles import bernoulli_polys, euler_polys_inverse, euler_polys_recurrence, hermite_polys_recurrence, hermite_polys_series


# -- coefficient sequences --------------------------------------------------


def test_coefficients_n2_table():
    cs = coefficient_sequence(2, 8)
    assert [str(c) for c in cs.values] == [
        "1", "1/2", "1/2", "3/8", "3/8", "5/16", "5/16", "35/128", "35/128",
    ]


def test_coefficients_n1_all_ones():
    assert all(c == 1 for c in coefficient_sequence(1, 12).values)


def test_coefficients_first_entry_is_one_over_n():
    for n in range(1, 8):
        assert coefficient_sequence(n, 1).values[1] == Fraction(1, n)


def test_coefficients_shifted_values():
    assert coefficient_sequence(2, 2, shift=1).values[1:] == (Fraction(1, 4), Fraction(1, 4))
    assert coefficient_sequence(3, 1, shift=1).values[1] == Fraction(1, 5)
    for n in range(1, 5):
        zero_shift = coefficient_sequence(n, 8, shift=0)
        assert zero_shift == coefficient_sequence(n, 8)


def test_named_builders_are_the_same_construction():
    assert canonical_coeffs(3, 6) == coefficient_sequence(3, 6)
    assert shifted_coeffs(3, 2, 6) == coefficient_sequence(3, 6, shift=2)


def test_recurrence_matches_closed_form_on_grid():
    for n in range(1, 7):
        for s in range(4):
            cs = coefficient_sequence(n, 12, shift=s)
            for k, value in enumerate(cs.values):
                assert value == closed_form_coefficient(n, k, shift=s)


def test_coefficients_scale_linearly_in_c0():
    base = coefficient_sequence(3, 6)
    scaled = coefficient_sequence(3, 6, c0=Fraction(-5, 7))
    assert tuple(v * Fraction(-5, 7) for v in base.values) == scaled.values


def test_coefficients_all_nonzero():
    for n in range(1, 7):
        assert all(coefficient_sequence(n, 10).values)


def test_coefficient_validation():
    with pytest.raises(ValueError):
        coefficient_sequence(0, 3)
    with pytest.raises(ValueError):
        coefficient_sequence(2, -1)
    with pytest.raises(ValueError):
        coefficient_sequence(2, 3, c0=0)
    with pytest.raises(ValueError):
        coefficient_sequence(2, 3, shift=-1)


def test_diagonal_matrix():
    cs = coefficient_sequence(2, 3)
    diag = cs.diagonal_matrix()
    assert diag.diagonal_entries() == list(cs.values)
    assert diag[2, 1] == 0


# -- basic sequence construction --------------------------------------------


def test_build_phi_binomial_structure():
    cs = coefficient_sequence(3, 6)
    seq = build_phi(cs)
    for k, poly in enumerate(seq.polys):
        assert poly.degree == k
        for (i, j), a in poly.terms.items():
            assert i + j == k  # canonical members are homogeneous
            assert a == math.comb(k, j) * cs.values[j]


def test_phi1_is_x0_plus_vector_over_n():
    for n in range(1, 7):
        p1 = build_family(n, 1).polys[1]
        assert p1.terms == {(1, 0): Fraction(1), (0, 1): Fraction(1, n)}


def test_phi0_is_c0():
    seq = build_family(2, 0, c0=Fraction(3, 4))
    assert seq.polys[0].terms == {(0, 0): Fraction(3, 4)}


def test_build_phi_matches_pascal_route():
    # second construction: row k of e^(H x0) D_c applied to the vector powers,
    # compared for m+1 distinct x0 samples (degree-m polynomial identity)
    n, m = 3, 6
    cs = coefficient_sequence(n, m)
    seq = build_phi(cs)
    h = creation_matrix(m)
    for step in range(m + 1):
        t = Fraction(2 * step - m, 3)
        pascal = nilpotent_exp(h, t)
        for k, poly in enumerate(seq.polys):
            for j in range(m + 1):
                binary = sum(
                    (a * t**i for (i, jj), a in poly.terms.items() if jj == j),
                    Fraction(0),
                )
                assert binary == pascal[k, j] * cs.values[j]


def test_build_phi_needs_enough_coefficients():
    cs = coefficient_sequence(2, 3)
    with pytest.raises(ValueError):
        build_phi(cs, 5)
    assert build_phi(cs, 2).m == 2


# -- expansion and evaluation ------------------------------------------------


def test_vector_power_expansion_small():
    # v^2 at n=2 is the scalar -(x1^2 + x2^2)
    p = vector_power_expansion(2, 2)
    minus_one = Multivector.scalar(2, -1)
    assert p == (
        CliffordPoly.monomial(2, (0, 2, 0), minus_one)
        + CliffordPoly.monomial(2, (0, 0, 2), minus_one)
    )


def test_expand_phi1_n2():
    seq = build_family(2, 1)
    half = Fraction(1, 2)
    expected = (
        CliffordPoly.variable(2, 0)
        + CliffordPoly.monomial(2, (0, 1, 0), Multivector.generator(2, 1) * half)
        + CliffordPoly.monomial(2, (0, 0, 1), Multivector.generator(2, 2) * half)
    )
    assert expand_multivariate(seq.polys[1], 2) == expected


def test_expand_phi2_n2():
    seq = build_family(2, 2)
    e1 = Multivector.generator(2, 1)
    e2 = Multivector.generator(2, 2)
    half = Fraction(1, 2)
    expected = (
        CliffordPoly.monomial(2, (2, 0, 0), Multivector.scalar(2, 1))
        + CliffordPoly.monomial(2, (1, 1, 0), e1)
        + CliffordPoly.monomial(2, (1, 0, 1), e2)
        + CliffordPoly.monomial(2, (0, 2, 0), Multivector.scalar(2, -half))
        + CliffordPoly.monomial(2, (0, 0, 2), Multivector.scalar(2, -half))
    )
    assert expand_multivariate(seq.polys[2], 2) == expected


def test_expansion_is_homogeneous():
    for n in (1, 2, 3):
        seq = build_family(n, 5)
        for k, poly in enumerate(seq.polys):
            expanded = expand_multivariate(poly, n)
            assert all(sum(exps) == k for exps in expanded.terms)


def test_eval_agrees_with_expansion():
    rng = random.Random(3)
    for n in (1, 2, 3):
        seq = build_family(n, 5)
        for k, poly in enumerate(seq.polys):
            expanded = expand_multivariate(poly, n)
            for _ in range(50):
                coords = [
                    Fraction(rng.randrange(-8, 9), rng.randrange(1, 5))
                    for _ in range(n + 1)
                ]
                x = Paravector(coords[0], tuple(coords[1:]))
                assert eval_poly(poly, x) == expanded.eval(coords)


def test_eval_known_value():
    seq = build_family(2, 1)
    value = seq.eval_at(Paravector(1, (2, 0)))[1]
    assert value == 1 + Multivector.generator(2, 1)


def test_eval_at_origin_kills_positive_degrees():
    seq = build_family(3, 6)
    origin = Paravector(0, (0, 0, 0))
    values = seq.eval_at(origin)
    assert values[0] == 1
    assert all(v.is_zero() for v in values[1:])


def test_eval_homogeneity_under_scaling():
    seq = build_family(2, 6)
    x = Paravector(Fraction(1, 3), (Fraction(2), Fraction(-1, 2)))
    t = Fraction(-3, 5)
    scaled_values = seq.eval_at(x.scaled(t))
    values = seq.eval_at(x)
    for k in range(7):
        assert scaled_values[k] == values[k] * t**k


def test_eval_dimension_mismatch():
    seq = build_family(2, 3)
    with pytest.raises(ValueError):
        seq.eval_at(Paravector(1, (1,)))


def test_complex_reduction_n1():
    seq = build_family(1, 10)
    x = Paravector(Fraction(2, 3), (Fraction(-1, 5),))
    z = x.to_multivector()
    values = seq.eval_at(x)
    for k in range(11):
        assert values[k] == z**k


@given(
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
)
@settings(max_examples=40, deadline=None)
def test_complex_reduction_property(x0, x1):
    seq = build_family(1, 6)
    x = Paravector(x0, (x1,))
    z = x.to_multivector()
    for k, value in enumerate(seq.eval_at(x)):
        assert value == z**k


# -- transfer families --------------------------------------------------------


def test_identity_transfer_is_noop():
    base = build_family(2, 4)
    same = apply_transfer(TriMatrix.identity(4), base, family="canonical")
    assert same.polys == base.polys


def test_transfer_order_mismatch():
    base = build_family(2, 4)
    with pytest.raises(ValueError):
        apply_transfer(TriMatrix.identity(3), base)


def test_bernoulli_phi1():
    seq = build_family(2, 1, family="bernoulli")
    base = build_family(2, 1)
    assert seq.polys[1].coefficient(0, 0) == Fraction(-1, 2)
    assert seq.polys[1] + Fraction(1, 2) * AppellPoly(0, {(0, 0): Fraction(1)}) == base.polys[1]


def test_hermite_phi2_is_p2_minus_half():
    seq = build_family(2, 2, family="hermite")
    base = build_family(2, 2)
    delta = seq.polys[2] + (-1) * base.polys[2]
    assert delta.terms == {(0, 0): Fraction(-1, 2)}


def test_transfer_families_are_not_homogeneous():
    seq = build_family(2, 2, family="euler")
    assert any(i + j != 2 for (i, j) in seq.polys[2].terms)


def test_family_validation():
    with pytest.raises(ValueError):
        build_family(2, 3, family="laguerre")
    with pytest.raises(ValueError):
        build_family(2, 3, family="frobenius-euler")  # lambda missing
    with pytest.raises(ValueError):
        build_family(2, 3, family="bernoulli", shift=1)


def test_frobenius_euler_at_minus_one_is_euler():
    fe = build_family(2, 5, family="frobenius-euler", lam=Fraction(-1))
    euler = build_family(2, 5, family="euler")
    assert fe.polys == euler.polys
    assert fe.lam == Fraction(-1)


# -- restriction to the real line ---------------------------------------------


def test_restrict_canonical_is_monomials():
    seq = build_family(3, 6)
    assert seq.restrict_real() == [
        [Fraction(0)] * k + [Fraction(1)] for k in range(7)
    ]


def test_restrict_bernoulli_matches_oracle():
    for n in (1, 2, 3):
        seq = build_family(n, 8, family="bernoulli")
        assert seq.restrict_real() == bernoulli_polys(8)


def test_restrict_euler_matches_both_oracles():
    seq = build_family(2, 8, family="euler")
    restricted = seq.restrict_real()
    assert restricted == euler_polys_inverse(8)
    assert restricted == euler_polys_recurrence(8)


def test_restrict_hermite_matches_both_oracles():
    seq = build_family(2, 8, family="hermite")
    restricted = seq.restrict_real()
    assert restricted == hermite_polys_series(8)
    assert restricted == hermite_polys_recurrence(8)


def test_restriction_commutes_with_transfer():
    # restrict(T * canonical) = T * (1, x0, x0^2, ...)
    m = 6
    transfer = bernoulli_transfer(m)
    seq = build_family(2, m, family="bernoulli")
    monomials = [
        [Fraction(0)] * k + [Fraction(1)] for k in range(m + 1)
    ]
    for k in range(m + 1):
        expected = [Fraction(0)] * (m + 1)
        for j in range(k + 1):
            for i, c in enumerate(monomials[j]):
                expected[i] += transfer[k, j] * c
        row = seq.restrict_real()[k]
        padded = row + [Fraction(0)] * (m + 1 - len(row))
        assert padded == expected


def test_restrict_poly_padding():
    poly = AppellPoly(3, {(3, 0): Fraction(1), (1, 2): Fraction(5), (0, 0): Fraction(-2)})
    assert restrict_poly(poly) == [Fraction(-2), Fraction(0), Fraction(0), Fraction(1)]


# -- truncated exponential ------------------------------------------------------


def test_exp_truncated_real_line():
    x = Paravector(Fraction(1), (Fraction(0), Fraction(0)))
    for order in (0, 1, 5):
        expected = sum(Fraction(1, math.factorial(k)) for k in range(order + 1))
        assert exp_truncated(x, order) == Multivector.scalar(2, expected)


def test_exp_truncated_order_zero():
    assert exp_truncated(Paravector(3, (1, 2)), 0) == 1


def test_exp_truncated_n1_approximates_complex_exponential():
    value = exp_truncated(Paravector(0, (1,)), 20)
    assert abs(float(value.scalar_part()) - math.cos(1)) < 1e-12
    assert abs(float(value.coefficient([1])) - math.sin(1)) < 1e-12


def test_exp_truncated_generating_coefficients():
    # Exp(t x) truncated at m equals sum_k P_k(x) t^k / k! for every rational t
    n, m = 2, 6
    x = Paravector(Fraction(1, 2), (Fraction(1), Fraction(-2)))
    seq = build_family(n, m)
    values = seq.eval_at(x)
    for t in (Fraction(1), Fraction(-1, 2), Fraction(3, 7), Fraction(0)):
        direct = exp_truncated(x.scaled(t), m)
        series = Multivector.zero(n)
        for k in range(m + 1):
            series = series + values[k] * (t**k * Fraction(1, math.factorial(k)))
        assert direct == series


def test_exp_truncated_rejects_negative_order():
    with pytest.raises(ValueError):
        exp_truncated(Paravector(1, (1,)), -1)


# -- serialization ----------------------------------------------------------------


def test_sequence_json_round_trip():
    for family, lam in (("canonical", None), ("frobenius-euler", Fraction(2, 3))):
        seq = build_family(2, 4, family=family, lam=lam)
        payload = seq.to_json()
        assert payload["n"] == 2 and payload["m"] == 4 and payload["family"] == family
        clone = AppellSequence.from_json(json.loads(json.dumps(payload)))
        assert clone.polys == seq.polys
        assert clone.coeffs == seq.coeffs
        assert clone.lam == seq.lam


def test_sequence_json_shifted_round_trip():
    seq = build_phi(coefficient_sequence(2, 3, shift=2))
    clone = AppellSequence.from_json(seq.to_json())
    assert clone.shift == 2 and clone.coeffs.shift == 2


def test_sequence_json_rejects_degree_gaps():
    payload = build_family(2, 2).to_json()
    payload["polys"] = [payload["polys"][0], payload["polys"][2]]
    with pytest.raises(ValueError):
        AppellSequence.from_json(payload)


def test_csv_rows_cover_all_terms():
    seq = build_family(2, 3)
    rows = list(seq.csv_rows())
    assert all(len(r) == 4 for r in rows)
    total = sum(len(p.terms) for p in seq.polys)
    assert len(rows) == total
    ks = [r[0] for r in rows]
    assert ks == sorted(ks)


def test_appell_poly_str():
    poly = build_family(2, 2).polys[2]
    assert str(poly) == "x0^2 + x0*xv + 1/2*xv^2"
