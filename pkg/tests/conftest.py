from __future__ import annotations

import random
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from freedist.bench import load_code_file
from freedist.codegen import random_code

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
CORPUS = ROOT / "corpus"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def load(name: str):
    return load_code_file(DATA / name).G


@pytest.fixture
def small_code():
    return load("small_code.json")


@pytest.fixture
def heapmod_code():
    return load("heapmod_counterexample.json")


@st.composite
def codes(draw, qs=(2, 3, 4, 5), max_n=4, max_delta=4, k=None):
    """Row-reduced, non-catastrophic generators drawn through a seeded rng."""
    q = draw(st.sampled_from(qs))
    n = draw(st.integers(2, max_n))
    kk = k if k is not None else draw(st.integers(1, n - 1))
    delta = draw(st.integers(0, max_delta))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_code(random.Random(seed), q, n, kk, delta)
