"""Random row-reduced, non-catastrophic generator matrices for testing and benchmarks."""

from __future__ import annotations

import random

from .errors import RankDeficient
from .galois import Field
from .polymat import GeneratorMatrix, is_noncatastrophic, is_row_reduced, trim

FIELDS = {
    2: Field(2),
    3: Field(3),
    4: Field(2, 2, (1, 1, 1)),
    5: Field(5),
}


def field_of_order(q: int) -> Field:
    try:
        return FIELDS[q]
    except KeyError:
        raise ValueError(f"no bundled field of order {q}") from None


def random_row_degrees(rng: random.Random, k: int, delta: int) -> list[int]:
    nu = [0] * k
    for _ in range(delta):
        nu[rng.randrange(k)] += 1
    return nu


def random_code(
    rng: random.Random,
    q: int,
    n: int,
    k: int,
    delta: int,
    *,
    nu: list[int] | None = None,
    max_tries: int = 1000,
) -> GeneratorMatrix:
    """Draw until the matrix is row reduced and non-catastrophic."""
    F = field_of_order(q)
    for _ in range(max_tries):
        degs = list(nu) if nu is not None else random_row_degrees(rng, k, delta)
        rows = []
        for d in degs:
            row = [[rng.randrange(q) for _ in range(d + 1)] for _ in range(n)]
            j = rng.randrange(n)
            row[j][d] = rng.randrange(1, q)
            rows.append([trim(e) for e in row])
        G = GeneratorMatrix.from_lists(F, rows)
        try:
            if is_row_reduced(G) and is_noncatastrophic(G):
                return G
        except RankDeficient:
            continue
    raise RuntimeError(f"no suitable code found for q={q} n={n} k={k} delta={delta}")


def random_params(rng: random.Random, delta_max: int) -> tuple[int, int, int, int]:
    q = rng.choice((2, 3, 4, 5))
    n = rng.randint(2, 4)
    k = rng.randint(1, n - 1)
    delta = rng.randint(0, delta_max)
    return q, n, k, delta


def code_suite(seed: int, count: int, delta_max: int = 5) -> list[GeneratorMatrix]:
    rng = random.Random(seed)
    return [random_code(rng, *random_params(rng, delta_max)) for _ in range(count)]
