import random
from fractions import Fraction

import pytest

from hyperappell.trimatrix import (
    TriMatrix,
    bernoulli_transfer,
    creation_matrix,
    derivation_matrix,
    euler_transfer,
    frobenius_euler_transfer,
    hermite_transfer,
    nilpotent_exp,
    pascal_matrix,
    tri_inverse,
)

from oracles import bernoulli_numbers, dense_creation, dense_identity, dense_mul


def test_shape_validation():
    with pytest.raises(ValueError):
        TriMatrix([[Fraction(1)], [Fraction(1)]])  # second row too short
    with pytest.raises(ValueError):
        TriMatrix([])


def test_indexing_above_diagonal_is_zero():
    m = creation_matrix(3)
    assert m[0, 3] == 0
    assert m[2, 1] == 2


def test_creation_matrix_subdiagonal():
    assert creation_matrix(3).subdiagonal() == [Fraction(1), Fraction(2), Fraction(3)]
    assert creation_matrix(0).is_zero()


def test_creation_matrix_is_nilpotent():
    h = creation_matrix(5)
    assert h.power(6).is_zero()
    assert not h.power(5).is_zero()


def test_matmul_matches_dense_oracle():
    rng = random.Random(7)
    for _ in range(10):
        m = rng.randrange(0, 6)
        a = TriMatrix(
            [[Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)) for _ in range(i + 1)] for i in range(m + 1)]
        )
        b = TriMatrix(
            [[Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)) for _ in range(i + 1)] for i in range(m + 1)]
        )
        dense_a = [[a[i, j] for j in range(m + 1)] for i in range(m + 1)]
        dense_b = [[b[i, j] for j in range(m + 1)] for i in range(m + 1)]
        expected = dense_mul(dense_a, dense_b)
        got = a @ b
        assert all(
            got[i, j] == expected[i][j] for i in range(m + 1) for j in range(m + 1)
        )


def test_derivation_matrix_entries():
    # alternating pattern: -(n + i - 1) below even rows, -i below odd ones
    ht = derivation_matrix(2, 3)
    assert ht.subdiagonal() == [Fraction(-2), Fraction(-2), Fraction(-4)]
    ht = derivation_matrix(3, 4)
    assert ht.subdiagonal() == [Fraction(-3), Fraction(-2), Fraction(-5), Fraction(-4)]


def test_derivation_matrix_shifted():
    ht = derivation_matrix(2, 3, shift=1)
    assert ht.subdiagonal() == [Fraction(-4), Fraction(-2), Fraction(-6)]


def test_derivation_matrix_n1_is_minus_creation():
    for m in range(0, 9):
        assert derivation_matrix(1, m) == creation_matrix(m).scale(-1)


def test_derivation_matrix_validation():
    with pytest.raises(ValueError):
        derivation_matrix(0, 3)
    with pytest.raises(ValueError):
        derivation_matrix(2, 3, shift=-1)


def test_nilpotent_exp_equals_pascal():
    for m in (0, 1, 4, 10):
        for t in (Fraction(1), Fraction(-2, 3), Fraction(5, 7)):
            assert nilpotent_exp(creation_matrix(m), t) == pascal_matrix(t, m)


def test_nilpotent_exp_rejects_nonnilpotent():
    with pytest.raises(ValueError):
        nilpotent_exp(TriMatrix.identity(2), Fraction(1))


def test_pascal_semigroup():
    rng = random.Random(40)
    for _ in range(100):
        a = Fraction(rng.randrange(-40, 41), rng.randrange(1, 11))
        b = Fraction(rng.randrange(-40, 41), rng.randrange(1, 11))
        assert pascal_matrix(a, 10) @ pascal_matrix(b, 10) == pascal_matrix(a + b, 10)


def test_pascal_inverse_is_negated_argument():
    p = pascal_matrix(Fraction(3, 2), 6)
    assert tri_inverse(p) == pascal_matrix(Fraction(-3, 2), 6)


def test_tri_inverse_round_trip():
    rng = random.Random(11)
    for _ in range(8):
        m = rng.randrange(0, 6)
        rows = [
            [Fraction(rng.randrange(-6, 7)) for _ in range(i)] + [Fraction(rng.randrange(1, 7))]
            for i in range(m + 1)
        ]
        a = TriMatrix(rows)
        assert a @ tri_inverse(a) == TriMatrix.identity(m)
        assert tri_inverse(a) @ a == TriMatrix.identity(m)


def test_tri_inverse_singular():
    with pytest.raises(ZeroDivisionError):
        tri_inverse(creation_matrix(2))


def test_bernoulli_transfer_first_column():
    # column 0 carries the Bernoulli numbers
    m = 8
    transfer = bernoulli_transfer(m)
    numbers = bernoulli_numbers(m)
    assert [transfer[i, 0] for i in range(m + 1)] == numbers


def test_bernoulli_transfer_defining_identity():
    # T * sum_k H^k/(k+1)! = I
    m = 6
    h = creation_matrix(m)
    acc = TriMatrix.zeros(m)
    term = TriMatrix.identity(m)
    fact = 1
    for k in range(m + 1):
        fact *= k + 1  # (k+1)!
        acc = acc + term.scale(Fraction(1, fact))
        term = term @ h
    assert bernoulli_transfer(m) @ acc == TriMatrix.identity(m)


def test_euler_transfer_small():
    t = euler_transfer(1)
    assert t[0, 0] == 1 and t[1, 0] == Fraction(-1, 2) and t[1, 1] == 1
    assert euler_transfer(4) == frobenius_euler_transfer(Fraction(-1), 4)


def test_frobenius_euler_rejects_lambda_one():
    with pytest.raises(ZeroDivisionError):
        frobenius_euler_transfer(Fraction(1), 3)


def test_frobenius_euler_defining_identity():
    lam = Fraction(2, 5)
    m = 6
    t = frobenius_euler_transfer(lam, m)
    p = pascal_matrix(Fraction(1), m)
    assert t @ (p - TriMatrix.identity(m).scale(lam)) == TriMatrix.identity(m).scale(1 - lam)


def test_hermite_transfer_small():
    t = hermite_transfer(2)
    assert t[0, 0] == 1 and t[1, 1] == 1 and t[2, 2] == 1
    assert t[2, 0] == Fraction(-1, 2) and t[1, 0] == 0 and t[2, 1] == 0


def test_hermite_transfer_is_exp_of_minus_h_squared_quarter():
    m = 7
    h = creation_matrix(m)
    h2 = (h @ h).scale(Fraction(-1, 4))
    assert hermite_transfer(m) == nilpotent_exp(h2, Fraction(1))


def test_apply_on_rationals_matches_dense():
    m = 4
    h = creation_matrix(m)
    vec = [Fraction(k + 1, 3) for k in range(m + 1)]
    dense = dense_creation(m)
    expected = [
        sum((dense[i][j] * vec[j] for j in range(m + 1)), Fraction(0))
        for i in range(m + 1)
    ]
    assert h.apply(vec) == expected


def test_apply_length_mismatch():
    with pytest.raises(ValueError):
        creation_matrix(3).apply([Fraction(1)] * 3)


def test_json_round_trip():
    m = pascal_matrix(Fraction(-2, 3), 4)
    payload = m.to_json()
    assert payload["m"] == 4
    assert TriMatrix.from_json(payload) == m


def test_diagonal_helpers():
    d = TriMatrix.diagonal([Fraction(1), Fraction(1, 2), Fraction(3)])
    assert d.diagonal_entries() == [Fraction(1), Fraction(1, 2), Fraction(3)]
    assert d[1, 0] == 0
    assert TriMatrix.identity(2).diagonal_entries() == [Fraction(1)] * 3
