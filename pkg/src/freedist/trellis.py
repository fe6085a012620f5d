"""Controller-canonical state-transition diagram of a row-reduced generator.

State layout
------------
Row ``i`` of the encoder holds ``nu_i`` cells, most recent first: cell 1 is
the input of row ``i`` one step ago, cell ``nu_i`` the oldest.  All cells are
flattened row by row and packed base ``q`` (flat cell ``f`` has weight
``q**f``), giving a state index in ``[0, q**delta)``; the zero state is 0.

Input vectors are enumerated in lexicographic order (row 1 most
significant), so label 0 is always the all-zero input.  Backward labels
enumerate predecessors: component ``i`` is the oldest cell of the
predecessor when ``nu_i > 0`` and the input of row ``i`` when ``nu_i = 0``.
Backward label 0 at the zero state is the trivial zero self-loop.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import NotRowReduced, StateSpaceTooLarge
from .polymat import GeneratorMatrix, is_row_reduced, row_degrees

DEFAULT_TABLE_LIMIT = 1 << 24

Registers = tuple[tuple[int, ...], ...]


def table_limit() -> int:
    """Largest state count for which dense tables are built (env FREEDIST_TABLE_LIMIT)."""
    raw = os.environ.get("FREEDIST_TABLE_LIMIT")
    return int(raw) if raw else DEFAULT_TABLE_LIMIT


def m_vector(registers: Registers) -> list[int]:
    """Zeros after the last nonzero cell of each row (whole row if it is zero)."""
    out = []
    for row in registers:
        m = 0
        for cell in reversed(row):
            if cell:
                break
            m += 1
        out.append(m)
    return out


def sigma(registers: Registers, nu: Sequence[int] | None = None) -> int:
    """max_i(nu_i - m_i): fewest steps between the zero state and this state."""
    if nu is None:
        nu = [len(r) for r in registers]
    return max((v - m for v, m in zip(nu, m_vector(registers))), default=0)


@dataclass(frozen=True)
class Transition:
    source: Registers
    inputs: tuple[int, ...]
    target: Registers
    output: tuple[int, ...]
    weight: int


@dataclass(frozen=True)
class TrellisTables:
    """Dense forward tables: ``next[s, a]`` and ``weight[s, a]``."""

    next: np.ndarray
    weight: np.ndarray


class Trellis:
    """State diagram of ``G``; per-state transition lists are computed lazily."""

    def __init__(self, G: GeneratorMatrix):
        nu = row_degrees(G)
        if not is_row_reduced(G):
            raise NotRowReduced(f"generator matrix {G} is not row reduced")
        self.G = G
        self.field = G.field
        self.q = G.field.q
        self.k = G.k
        self.n = G.n
        self.nu = tuple(nu)
        self.M = max(nu)
        self.delta = sum(nu)
        self.num_states = self.q**self.delta
        self.num_inputs = self.q**self.k

        q = self.q
        self.offsets = tuple(sum(self.nu[:i]) for i in range(self.k))
        self.inputs = list(itertools.product(range(q), repeat=self.k))

        F = self.field
        # taps: contributions of state cells and current inputs to each output
        self._state_taps: list[list[tuple[int, int]]] = []
        self._input_taps: list[list[tuple[int, int]]] = []
        for j in range(self.n):
            st, it = [], []
            for i in range(self.k):
                c0 = G.coeff(i, j, 0)
                if c0:
                    it.append((i, c0))
                for d in range(1, self.nu[i] + 1):
                    c = G.coeff(i, j, d)
                    if c:
                        st.append((self.offsets[i] + d - 1, c))
            self._state_taps.append(st)
            self._input_taps.append(it)

        self._input_out = [self._contrib(self._input_taps, u) for u in self.inputs]
        self._input_next = [
            sum(u[i] * q ** self.offsets[i] for i in range(self.k) if self.nu[i] > 0)
            for u in self.inputs
        ]
        # backward label e: oldest cells of the predecessor / inputs of nu=0 rows
        self._old_part = []
        self._old_out = []
        self._e_input_part = []
        for e in self.inputs:
            digits = [0] * self.delta
            for i in range(self.k):
                if self.nu[i] > 0:
                    digits[self.offsets[i] + self.nu[i] - 1] = e[i]
            self._old_part.append(self._pack(digits))
            self._old_out.append(self._contrib(self._state_taps, digits))
            self._e_input_part.append(
                sum(e[i] * q ** (self.k - 1 - i) for i in range(self.k) if self.nu[i] == 0)
            )
        self._succ: dict[int, list[tuple[int, int]]] = {}
        self._pred: dict[int, list[tuple[int, int]]] = {}
        self._sigma: dict[int, int] = {}

    # --- encoding -----------------------------------------------------------

    def _contrib(self, taps: list[list[tuple[int, int]]], values: Sequence[int]) -> tuple[int, ...]:
        F = self.field
        out = []
        for col in taps:
            acc = 0
            for pos, c in col:
                v = values[pos]
                if v:
                    acc = F.add(acc, F.mul(c, v))
            out.append(acc)
        return tuple(out)

    def _pack(self, digits: Sequence[int]) -> int:
        v = 0
        for dgt in reversed(digits):
            v = v * self.q + dgt
        return v

    def _unpack(self, s: int) -> list[int]:
        out = []
        for _ in range(self.delta):
            s, r = divmod(s, self.q)
            out.append(r)
        return out

    def encode_state(self, registers: Registers) -> int:
        if len(registers) != self.k or any(len(r) != v for r, v in zip(registers, self.nu)):
            raise ValueError(f"register shape does not match row degrees {self.nu}")
        return self._pack([c for row in registers for c in row])

    def decode_state(self, s: int) -> Registers:
        if not 0 <= s < self.num_states:
            raise ValueError(f"state index {s} outside [0, {self.num_states})")
        d = self._unpack(s)
        return tuple(tuple(d[o : o + v]) for o, v in zip(self.offsets, self.nu))

    def input_index(self, inputs: Sequence[int]) -> int:
        a = 0
        for x in inputs:
            a = a * self.q + x
        return a

    # --- definition-level transitions --------------------------------------

    def output(self, registers: Registers, inputs: Sequence[int]) -> tuple[int, ...]:
        """sum_i sum_d u_i(t-d) * g_ij[d] straight from the generator."""
        F, G = self.field, self.G
        out = []
        for j in range(self.n):
            acc = 0
            for i in range(self.k):
                history = (inputs[i],) + registers[i]
                for d, u in enumerate(history):
                    if u:
                        acc = F.add(acc, F.mul(u, G.coeff(i, j, d)))
            out.append(acc)
        return tuple(out)

    def step(self, registers: Registers, inputs: Sequence[int]) -> Registers:
        return tuple(
            ((inputs[i],) + row[:-1]) if self.nu[i] else () for i, row in enumerate(registers)
        )

    def _transition(self, src: Registers, u: tuple[int, ...]) -> Transition:
        out = self.output(src, u)
        return Transition(src, u, self.step(src, u), out, sum(1 for x in out if x))

    def forward_extensions(self, registers: Registers) -> list[Transition]:
        """All q^k outgoing transitions, in lexicographic input order."""
        return [self._transition(registers, u) for u in self.inputs]

    def backward_extensions(self, registers: Registers) -> list[Transition]:
        """All q^k transitions entering this state, in backward-label order."""
        out = []
        for e in self.inputs:
            src, u = [], []
            for i, row in enumerate(registers):
                if self.nu[i]:
                    src.append(row[1:] + (e[i],))
                    u.append(row[0])
                else:
                    src.append(())
                    u.append(e[i])
            out.append(self._transition(tuple(src), tuple(u)))
        return out

    # --- fast per-state lists (used by the searches) ------------------------

    def _shift(self, digits: list[int]) -> list[int]:
        out = [0] * self.delta
        for o, v in zip(self.offsets, self.nu):
            for p in range(1, v):
                out[o + p] = digits[o + p - 1]
        return out

    def _unshift(self, digits: list[int]) -> list[int]:
        out = [0] * self.delta
        for o, v in zip(self.offsets, self.nu):
            for p in range(v - 1):
                out[o + p] = digits[o + p + 1]
        return out

    def successors(self, s: int) -> list[tuple[int, int]]:
        """[(next state, output weight)] indexed by input label."""
        got = self._succ.get(s)
        if got is not None:
            return got
        F = self.field
        digits = self._unpack(s)
        sc = self._contrib(self._state_taps, digits)
        base = self._pack(self._shift(digits))
        out = []
        for a, ic in enumerate(self._input_out):
            w = 0
            for x, y in zip(sc, ic):
                if F.add(x, y):
                    w += 1
            out.append((base + self._input_next[a], w))
        self._succ[s] = out
        return out

    def predecessors(self, s: int) -> list[tuple[int, int]]:
        """[(previous state, output weight)] indexed by backward label."""
        got = self._pred.get(s)
        if got is not None:
            return got
        F = self.field
        q = self.q
        digits = self._unpack(s)
        un = self._unshift(digits)
        base = self._pack(un)
        sc = self._contrib(self._state_taps, un)
        ufix = sum(
            digits[self.offsets[i]] * q ** (self.k - 1 - i) for i in range(self.k) if self.nu[i]
        )
        out = []
        for e in range(self.num_inputs):
            ic = self._input_out[ufix + self._e_input_part[e]]
            oc = self._old_out[e]
            w = 0
            for x, y, z in zip(sc, oc, ic):
                if F.add(F.add(x, y), z):
                    w += 1
            out.append((base + self._old_part[e], w))
        self._pred[s] = out
        return out

    def sigma_of(self, s: int) -> int:
        got = self._sigma.get(s)
        if got is None:
            got = sigma(self.decode_state(s), self.nu)
            self._sigma[s] = got
        return got

    def reverse_index(self, s: int) -> int:
        """Per-row register reversal: this state's coordinates on the reverse code."""
        d = self._unpack(s)
        out = []
        for o, v in zip(self.offsets, self.nu):
            out.extend(reversed(d[o : o + v]))
        return self._pack(out)

    # --- dense tables -------------------------------------------------------

    @cached_property
    def _tables(self) -> TrellisTables:
        S, A, q = self.num_states, self.num_inputs, self.q
        F = self.field
        powers = q ** np.arange(self.delta, dtype=np.int64)
        states = np.arange(S, dtype=np.int64)
        digits = (states[:, None] // powers[None, :]) % q if self.delta else np.zeros((S, 0), np.int64)
        U = np.array(self.inputs, dtype=np.int64).reshape(A, self.k)

        weight = np.zeros((S, A), dtype=np.int16)
        for j in range(self.n):
            acc = np.zeros((S, A), dtype=np.int64)
            for f, c in self._state_taps[j]:
                acc = F.add_arrays(acc, F.scale_lookup(c)[digits[:, f]][:, None])
            for i, c in self._input_taps[j]:
                acc = F.add_arrays(acc, F.scale_lookup(c)[U[:, i]][None, :])
            weight += (acc != 0).astype(np.int16)

        shifted = np.zeros(S, dtype=np.int64)
        for o, v in zip(self.offsets, self.nu):
            for p in range(1, v):
                shifted += digits[:, o + p - 1] * powers[o + p]
        inpart = np.zeros(A, dtype=np.int64)
        for i in range(self.k):
            if self.nu[i]:
                inpart += U[:, i] * powers[self.offsets[i]]
        nxt = (shifted[:, None] + inpart[None, :]).astype(np.int64)
        return TrellisTables(nxt, weight)

    def tables(self) -> TrellisTables:
        limit = table_limit()
        if self.num_states > limit:
            raise StateSpaceTooLarge(f"{self.num_states} states exceed the table limit {limit}")
        return self._tables
