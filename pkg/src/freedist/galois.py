"""Arithmetic in small finite fields F_q with q = p**m.

Elements are plain ints in ``[0, q)``.  For ``m > 1`` the int packs the
coefficients of the residue polynomial in base ``p``: digit ``i`` is the
coefficient of ``z**i``.  Full multiplication/inverse tables are built when
``q <= 256``; larger fields fall back to schoolbook multiply + reduction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    MalformedModulus,
    MissingModulus,
    NonPrimeCharacteristic,
    ReducibleModulus,
)

TABLE_LIMIT = 256
MAX_ORDER = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by b over F_p; b must have invertible leading coefficient."""
    r = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(r) - 1 >= db and r:
        f = (r[-1] * inv_lead) % p
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - f * bc) % p
        _trim(r)
    return r


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2 over F_p."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _polymod_p(modulus, list(low) + [1], p):
                return False
    return True


def validate_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> None:
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if m < 1:
        raise MalformedModulus(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise MalformedModulus(f"field order {p}**{m} exceeds {MAX_ORDER}")
    if modulus is None:
        if m > 1:
            raise MissingModulus(f"F_{p}^{m} needs a modulus polynomial")
        return
    mod = list(modulus)
    if len(mod) != m + 1 or any(not 0 <= c < p for c in mod) or mod[-1] != 1:
        raise MalformedModulus(
            f"modulus must be monic of degree {m} with coefficients in [0, {p}), got {mod}"
        )
    if not is_irreducible(mod, p):
        raise ReducibleModulus(f"modulus {mod} is reducible over F_{p}")


@dataclass(frozen=True)
class Field:
    """The finite field F_{p^m}. Instances are immutable and hashable."""

    p: int
    m: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.modulus is not None:
            object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        validate_field(self.p, self.m, self.modulus)

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:
        if self.m == 1:
            return f"Field(p={self.p})"
        return f"Field(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # --- encoding -----------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def pack(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of F_{self.q}")

    # --- slow path ----------------------------------------------------------

    def _add_raw(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self.pack([(x + y) % self.p for x, y in zip(da, db)])

    def _neg_raw(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self.pack([(-x) % self.p for x in self.digits(a)])

    def _mul_raw(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        r = _polymod_p(prod, self.modulus, self.p)
        return self.pack(r + [0] * (self.m - len(r)))

    def _inv_raw(self, a: int) -> int:
        # a^(q-2) by square-and-multiply
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    # --- tables -------------------------------------------------------------

    @cached_property
    def _tables(self) -> tuple[list[list[int]], list[list[int]], list[int], list[int]] | None:
        q = self.q
        if q > TABLE_LIMIT:
            return None
        add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        neg = [self._neg_raw(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        return add, mul, neg, inv

    @property
    def mul_table(self) -> list[list[int]] | None:
        t = self._tables
        return None if t is None else t[1]

    # --- public arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        t = self._tables
        return t[0][a][b] if t else self._add_raw(a, b)

    def neg(self, a: int) -> int:
        t = self._tables
        return t[2][a] if t else self._neg_raw(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        t = self._tables
        return t[1][a][b] if t else self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        t = self._tables
        return t[3][a] if t else self._inv_raw(a)

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero(f"division of {a} by zero")
        return self.mul(a, self.inv(b))

    def apply(self, op: str, a: int, b: int | None = None) -> int:
        """Dispatch ``op`` in {add, sub, mul, div, neg, inv} with range checks."""
        self._check(a)
        if op in ("neg", "inv"):
            return getattr(self, op)(a)
        if b is None:
            raise TypeError(f"{op} needs two operands")
        self._check(b)
        if op not in ("add", "sub", "mul", "div"):
            raise ValueError(f"unknown field operation {op!r}")
        return getattr(self, op)(a, b)

    def elements(self) -> range:
        return range(self.q)

    # --- vectorised helpers (used to build trellis tables) ------------------

    def add_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            out += (((a // scale) % self.p + (b // scale) % self.p) % self.p) * scale
            scale *= self.p
        return out

    def scale_lookup(self, c: int) -> np.ndarray:
        """Array ``t`` with ``t[x] = c*x`` for every element x."""
        return np.array([self.mul(c, x) for x in range(self.q)], dtype=np.int64)

    # --- json --------------------------------------------------------------

    def to_dict(self) -> dict:
        d = {"p": self.p, "m": self.m}
        if self.modulus is not None:
            d["modulus"] = list(self.modulus)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Field":
        return cls(int(d["p"]), int(d.get("m", 1)), d.get("modulus"))


GF2 = Field(2)
