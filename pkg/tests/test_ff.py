from __future__ import annotations

import numpy as np
import pytest

from wprm.errors import DivisionByZero, NoBuiltinModulus, NotPrimePower, ReducibleModulus
from wprm.ff import BUILTIN_MODULI, field_arith, field_elements, field_make, is_irreducible, prime_power

QS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27)


def test_examples():
    F5 = field_make(5)
    assert (F5.q, F5.k) == (5, 1)
    F4 = field_make(4)
    assert F4.modulus == (1, 1, 1)
    with pytest.raises(NotPrimePower):
        field_make(6)
    assert field_arith(F5, "inv", 3) == 2
    assert field_arith(field_make(2), "add", 1, 1) == 0
    # alpha = 2, alpha + 1 = 3 in the base-2 encoding
    assert field_arith(F4, "mul", 2, 3) == 1
    assert field_elements(field_make(2)) == (0, 1)
    assert field_elements(F5) == (0, 1, 2, 3, 4)
    assert [F4.format(x) for x in field_elements(F4)] == ["0", "1", "a", "a+1"]


@pytest.mark.parametrize("q", [0, 1, 6, 10, 12, 15, 100])
def test_not_prime_power(q):
    with pytest.raises(NotPrimePower):
        prime_power(q)


def test_prime_power():
    assert prime_power(27) == (3, 3)
    assert prime_power(16) == (2, 4)
    assert prime_power(13) == (13, 1)


def test_moduli():
    for q, mod in BUILTIN_MODULI.items():
        p, k = prime_power(q)
        assert len(mod) == k + 1 and is_irreducible(mod, p)
    # t^2 + 1 = (t + 1)^2 over GF(2)
    with pytest.raises(ReducibleModulus):
        field_make(4, (1, 0, 1))
    with pytest.raises(ReducibleModulus):
        field_make(4, (1, 1))
    with pytest.raises(NoBuiltinModulus):
        field_make(32)
    # an alternative modulus for GF(8) gives a different field table
    assert is_irreducible((1, 0, 1, 1), 2)
    assert field_make(8, (1, 0, 1, 1)).mul.tolist() != field_make(8).mul.tolist()


@pytest.mark.parametrize("q", QS)
def test_axioms_exhaustive(q):
    F = field_make(q)
    A, M = F.add.astype(np.int64), F.mul.astype(np.int64)
    e = np.arange(q)
    assert (A == A.T).all() and (M == M.T).all()
    assert (A[0] == e).all() and (M[1] == e).all() and (M[0] == 0).all()
    # associativity and distributivity over all triples
    assert (A[A[:, :, None], e[None, None, :]] == A[e[:, None, None], A[None, :, :]]).all()
    assert (M[M[:, :, None], e[None, None, :]] == M[e[:, None, None], M[None, :, :]]).all()
    lhs = M[e[:, None, None], A[None, :, :]]
    rhs = A[M[:, :, None], M[:, None, :]]
    assert (lhs == rhs).all()
    assert (A[e, F.neg] == 0).all()
    assert (M[e[1:], F.inv_table[1:]] == 1).all()
    # every row of the multiplication table of a unit is a permutation
    assert all(sorted(M[a]) == list(range(q)) for a in range(1, q))


@pytest.mark.parametrize("q", QS)
def test_frobenius_and_power(q):
    F = field_make(q)
    for x in F.elements():
        assert F.power(x, q) == x
        assert F.power(F.plus(x, 1), F.p) == F.plus(F.power(x, F.p), 1)
        if x:
            assert F.power(x, q - 1) == 1
            assert F.power(x, -1) == F.inverse(x)
            assert F.divide(x, x) == 1
    assert F.power(0, 0) == 1


def test_division_by_zero():
    F = field_make(9)
    with pytest.raises(DivisionByZero):
        F.inverse(0)
    with pytest.raises(ZeroDivisionError):
        field_arith(F, "div", 3, 0)
    with pytest.raises(ValueError):
        field_arith(F, "frob", 1, 1)


def test_multiplicative_group_cyclic():
    for q in QS:
        F = field_make(q)
        orders = set()
        for g in F.units():
            x, n = g, 1
            while x != 1:
                x, n = F.times(x, g), n + 1
            orders.add(n)
        assert max(orders) == q - 1
