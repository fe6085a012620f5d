"""Polynomials and polynomial generator matrices over F_q.

A polynomial is a tuple of field elements, low degree first, with no trailing
zeros; the zero polynomial is ``()``.  Everything here is exact arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    Catastrophic,
    DimensionMismatch,
    NotRowReduced,
    ParseError,
    PreconditionError,
    RankDeficient,
    ZeroRow,
)
from .galois import Field

Poly = tuple[int, ...]


def trim(c: Sequence[int]) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def deg(a: Poly) -> int:
    """Degree, with -1 standing in for deg(0) = -inf."""
    return len(a) - 1


def poly_add(F: Field, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = F.add(out[i], y)
    return trim(out)


def poly_neg(F: Field, a: Poly) -> Poly:
    return tuple(F.neg(x) for x in a)


def poly_sub(F: Field, a: Poly, b: Poly) -> Poly:
    return poly_add(F, a, poly_neg(F, b))


def poly_scale(F: Field, c: int, a: Poly) -> Poly:
    return trim([F.mul(c, x) for x in a])


def poly_mul(F: Field, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def poly_divmod(F: Field, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = F.inv(b[-1])
    while len(r) >= len(b) and r:
        f = F.mul(r[-1], inv_lead)
        shift = len(r) - len(b)
        quo[shift] = f
        for i, y in enumerate(b):
            r[shift + i] = F.sub(r[shift + i], F.mul(f, y))
        r = list(trim(r))
    return trim(quo), tuple(r)


def monic(F: Field, a: Poly) -> Poly:
    if not a:
        return a
    return poly_scale(F, F.inv(a[-1]), a)


def poly_gcd(F: Field, a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid; gcd(0, 0) = 0."""
    while b:
        a, b = b, poly_divmod(F, a, b)[1]
    return monic(F, a)


def poly_reverse(a: Poly, n: int) -> Poly:
    """z^n a(1/z); requires deg a <= n."""
    padded = list(a) + [0] * (n + 1 - len(a))
    return trim(reversed(padded))


def poly_weight(v: Sequence[Poly]) -> int:
    """Hamming weight of a polynomial vector: nonzero coefficients over all entries."""
    return sum(1 for entry in v for c in entry if c)


def matrix_rank(F: Field, rows: Sequence[Sequence[int]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = F.inv(m[rank][col])
        m[rank] = [F.mul(inv, x) for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def determinant(F: Field, mat: Sequence[Sequence[Poly]]) -> Poly:
    """Laplace expansion along the first row. Fine for k <= 4."""
    size = len(mat)
    if size == 1:
        return mat[0][0]
    total: Poly = ()
    for j in range(size):
        if not mat[0][j]:
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = poly_mul(F, mat[0][j], determinant(F, minor))
        total = poly_sub(F, total, term) if j % 2 else poly_add(F, total, term)
    return total


@dataclass(frozen=True)
class GeneratorMatrix:
    """k x n polynomial matrix; ``rows[i][j]`` is the entry g_ij as a Poly."""

    field: Field
    rows: tuple[tuple[Poly, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(trim(e) for e in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise DimensionMismatch("generator matrix needs at least one row")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("rows have different lengths")
        if len(rows) > n:
            raise DimensionMismatch(f"k={len(rows)} exceeds n={n}")
        q = self.field.q
        for r in rows:
            for e in r:
                if any(not 0 <= c < q for c in e):
                    raise ValueError(f"coefficient outside [0, {q}) in {e}")

    @classmethod
    def from_lists(cls, field: Field, rows: Sequence[Sequence[Sequence[int]]]) -> "GeneratorMatrix":
        return cls(field, tuple(tuple(tuple(e) for e in row) for row in rows))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def coeff(self, i: int, j: int, d: int) -> int:
        e = self.rows[i][j]
        return e[d] if d < len(e) else 0

    def to_lists(self) -> list[list[list[int]]]:
        return [[list(e) for e in row] for row in self.rows]

    def __str__(self) -> str:
        def fmt(e: Poly) -> str:
            if not e:
                return "0"
            terms = []
            for d, c in enumerate(e):
                if c:
                    mono = "1" if d == 0 else ("z" if d == 1 else f"z^{d}")
                    if c == 1:
                        terms.append(mono)
                    else:
                        terms.append(str(c) if d == 0 else f"{c}{mono}")
            return "+".join(terms)

        return "[" + "; ".join(", ".join(fmt(e) for e in row) for row in self.rows) + "]"


def row_degrees(G: GeneratorMatrix) -> list[int]:
    nu = []
    for i, row in enumerate(G.rows):
        d = max(deg(e) for e in row)
        if d < 0:
            raise ZeroRow(f"row {i} of the generator matrix is zero")
        nu.append(d)
    return nu


def external_degree(G: GeneratorMatrix) -> int:
    return sum(row_degrees(G))


def minors(G: GeneratorMatrix):
    """Yield (column subset, k x k minor) for every subset, in lexicographic order."""
    for cols in itertools.combinations(range(G.n), G.k):
        sub = [[row[c] for c in cols] for row in G.rows]
        yield cols, determinant(G.field, sub)


def internal_degree(G: GeneratorMatrix) -> int:
    best = -1
    for _, m in minors(G):
        best = max(best, deg(m))
    if best < 0:
        raise RankDeficient("every k x k minor is zero")
    return best


def leading_row_matrix(G: GeneratorMatrix) -> list[list[int]]:
    """Coefficient of z^{nu_i} in every entry of row i."""
    nu = row_degrees(G)
    return [[G.coeff(i, j, nu[i]) for j in range(G.n)] for i in range(G.k)]


def is_row_reduced(G: GeneratorMatrix) -> bool:
    return matrix_rank(G.field, leading_row_matrix(G)) == G.k


def minors_gcd(G: GeneratorMatrix) -> Poly:
    g: Poly = ()
    for _, m in minors(G):
        g = poly_gcd(G.field, g, m)
    return g


def is_noncatastrophic(G: GeneratorMatrix) -> bool:
    """Left primeness: the k x k minors have a unit gcd."""
    row_degrees(G)
    g = minors_gcd(G)
    if not g:
        raise RankDeficient("every k x k minor is zero")
    return g == (1,)


def require_distance_ready(G: GeneratorMatrix) -> list[int]:
    """Raise unless G is row reduced and non-catastrophic; return its row degrees."""
    nu = row_degrees(G)
    if not is_row_reduced(G):
        raise NotRowReduced(f"generator matrix {G} is not row reduced")
    if not is_noncatastrophic(G):
        raise Catastrophic(f"generator matrix {G} is catastrophic")
    return nu


def reverse_code(G: GeneratorMatrix) -> GeneratorMatrix:
    """Entry (i, j) becomes z^{nu_i} g_ij(1/z)."""
    nu = require_distance_ready(G)
    rows = tuple(tuple(poly_reverse(e, nu[i]) for e in row) for i, row in enumerate(G.rows))
    return GeneratorMatrix(G.field, rows)


def singleton_bound(n: int, k: int, delta: int) -> int:
    """Generalized Singleton bound on the free distance of an (n, k, delta) code."""
    return (n - k) * (delta // k + 1) + delta + 1


def encode(u: Sequence[Poly], G: GeneratorMatrix) -> tuple[Poly, ...]:
    if len(u) != G.k:
        raise DimensionMismatch(f"input has {len(u)} entries, generator has k={G.k}")
    F = G.field
    out = []
    for j in range(G.n):
        acc: Poly = ()
        for i in range(G.k):
            acc = poly_add(F, acc, poly_mul(F, trim(u[i]), G.rows[i][j]))
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class CodeProfile:
    n: int
    k: int
    q: int
    nu: tuple[int, ...]
    M: int
    delta: int
    external_degree: int
    row_reduced: bool
    noncatastrophic: bool
    singleton: int


def code_profile(G: GeneratorMatrix) -> CodeProfile:
    nu = row_degrees(G)
    delta = internal_degree(G)
    return CodeProfile(
        n=G.n,
        k=G.k,
        q=G.field.q,
        nu=tuple(nu),
        M=max(nu),
        delta=delta,
        external_degree=sum(nu),
        row_reduced=is_row_reduced(G),
        noncatastrophic=is_noncatastrophic(G),
        singleton=singleton_bound(G.n, G.k, delta),
    )


# --- CodeSpec json -----------------------------------------------------------


def code_to_dict(G: GeneratorMatrix, code_id: str | None = None) -> dict:
    d = {"field": G.field.to_dict(), "generator": G.to_lists()}
    if code_id is not None:
        d["id"] = code_id
    return d


def code_from_dict(d: dict) -> GeneratorMatrix:
    try:
        field = Field.from_dict(d["field"])
        gen = d["generator"]
    except PreconditionError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"code spec needs 'field' and 'generator': {exc}") from exc
    if not isinstance(gen, list) or not all(isinstance(r, list) for r in gen):
        raise ParseError("'generator' must be a list of rows")
    for row in gen:
        for e in row:
            if not isinstance(e, list) or not all(isinstance(c, int) for c in e):
                raise ParseError(f"entry {e!r} is not a list of integer coefficients")
    try:
        return GeneratorMatrix.from_lists(field, gen)
    except PreconditionError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
