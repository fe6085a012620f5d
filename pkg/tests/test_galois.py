from __future__ import annotations

import itertools

import numpy as np
import pytest

from freedist.errors import DivisionByZero, MissingModulus, NonPrimeCharacteristic, ReducibleModulus
from freedist.galois import GF2, Field, is_irreducible, is_prime

GF4 = Field(2, 2, (1, 1, 1))  # alpha^2 = alpha + 1, alpha encoded as 2
SMALL = [Field(2), Field(3), GF4, Field(5), Field(7), Field(2, 3, (1, 1, 0, 1))]


def test_gf4_hand_tables():
    # rows/cols 0, 1, a, a+1
    assert [[GF4.add(a, b) for b in range(4)] for a in range(4)] == [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ]
    assert [[GF4.mul(a, b) for b in range(4)] for a in range(4)] == [
        [0, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
    ]


def test_prime_field_arithmetic():
    F = Field(5)
    assert F.mul(3, 4) == 2
    assert F.inv(2) == 3
    assert F.neg(1) == 4
    assert F.div(1, 3) == 2
    assert GF2.add(1, 1) == 0


@pytest.mark.parametrize("F", SMALL, ids=repr)
def test_field_axioms_exhaustive(F):
    els = list(F.elements())
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
    for a, b, c in itertools.product(els, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    for a in els[1:]:
        assert F.mul(a, F.inv(a)) == 1
    # multiplicative group is cyclic of order q - 1: no zero divisors
    assert all(F.mul(a, b) for a in els[1:] for b in els[1:])


def test_vectorized_matches_scalar():
    F = Field(3, 2, (2, 2, 1))
    a = np.arange(F.q)
    for c in F.elements():
        assert list(F.scale_lookup(c)[a]) == [F.mul(c, x) for x in a]
        assert list(F.add_arrays(a, np.full(F.q, c))) == [F.add(x, c) for x in a]


def test_errors():
    with pytest.raises(NonPrimeCharacteristic):
        Field(4)
    with pytest.raises(MissingModulus):
        Field(2, 2)
    with pytest.raises(ReducibleModulus):
        Field(2, 2, (1, 0, 1))
    with pytest.raises(DivisionByZero):
        GF4.inv(0)
    with pytest.raises(ZeroDivisionError):
        Field(5).div(1, 0)


def test_irreducibility():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)
    assert is_irreducible((1, 1, 0, 1), 2)
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_dict_round_trip():
    for F in SMALL:
        assert Field.from_dict(F.to_dict()) == F
