"""Erasure repair for GF(4) locally repairable codes.

Local repair reads the at most r surviving symbols of a repair group;
general erasure decoding solves the parity-check system restricted to the
erased coordinates.  Decoding failure is reported as a value, never an
exception.  Simulations are deterministic given a seed: trial t of a run
draws from its own generator seeded by (seed, t).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .code import LinearCode
from .gf4 import MUL, INV, MUL_TABLE
from .lrc import LrcProfile
from .matrix import Gf4Matrix, rref, submatrix_cols


def encode(c: LinearCode, message: Sequence[int]) -> list[int]:
    """message (length k) times the generator matrix."""
    if len(message) != c.k:
        raise ValueError(f"message length must be k = {c.k}, got {len(message)}")
    g = c.generator.array
    word = np.zeros(c.n, dtype=np.uint8)
    for i, m in enumerate(message):
        if m:
            word ^= MUL_TABLE[m, g[i]]
    return [int(x) for x in word]


def repair_local(
    c: LinearCode, p: LrcProfile, word: Sequence[int], pos: int
) -> tuple[int, int]:
    """Recover coordinate ``pos`` from its repair group.

    Uses the first designated locality row covering ``pos``:
    h_pos * x_pos = sum of h_j * x_j over the rest of the support, so
    x_pos = h_pos^{-1} * that sum.  Returns (value, symbols_read).
    """
    h = c.parity_check
    for ri in p.locality_rows:
        if not h[ri, pos]:
            continue
        acc = 0
        reads = 0
        for j in range(c.n):
            if j != pos and h[ri, j]:
                acc ^= MUL[h[ri, j]][word[j]]
                reads += 1
        return MUL[INV[h[ri, pos]]][acc], reads
    raise ValueError(f"no locality row covers coordinate {pos}")


@dataclass(frozen=True)
class DecodeResult:
    """Outcome of erasure decoding: the filled word, or a failure flag when
    the erased columns of H are linearly dependent (ambiguous erasures)."""

    ok: bool
    word: Optional[tuple[int, ...]] = None


def decode_erasures(
    c: LinearCode, received: Sequence[Optional[int]]
) -> DecodeResult:
    """Fill in erased coordinates (None entries) by solving H x = syndrome.

    Succeeds iff the columns of H at the erased positions are linearly
    independent; otherwise returns ``DecodeResult(ok=False)``.
    """
    if len(received) != c.n:
        raise ValueError(f"received word length must be n = {c.n}")
    erased = [j for j, x in enumerate(received) if x is None]
    if not erased:
        return DecodeResult(True, tuple(int(x) for x in received))  # type: ignore[arg-type]
    h = c.parity_check
    # syndrome of the known part
    syn = [0] * h.rows
    for i in range(h.rows):
        acc = 0
        for j in range(c.n):
            if j not in erased and h[i, j] and received[j]:
                acc ^= MUL[h[i, j]][received[j]]
        syn[i] = acc
    # solve sub(H) * e = syn by eliminating [sub(H) | syn]
    sub = submatrix_cols(h, erased)
    aug = Gf4Matrix(
        [list(sub.array[i]) + [syn[i]] for i in range(h.rows)]
    )
    reduced, pivots = rref(aug)
    if len(erased) in pivots or len(pivots) > len(erased):
        return DecodeResult(False)  # inconsistent system
    if len(pivots) < len(erased):
        return DecodeResult(False)  # dependent erased columns: ambiguous
    word = list(received)
    for row_idx, col in enumerate(pivots):
        word[erased[col]] = reduced[row_idx, len(erased)]
    return DecodeResult(True, tuple(int(x) for x in word))  # type: ignore[arg-type]


@dataclass(frozen=True)
class RepairReport:
    """Per-coordinate local-repair statistics over a simulation run."""

    trials: int
    successes: tuple[int, ...]      # per coordinate
    max_accesses: tuple[int, ...]   # per coordinate

    @property
    def all_ok(self) -> bool:
        return all(s == self.trials for s in self.successes)

    def to_csv(self) -> str:
        lines = ["coordinate,successes,accesses"]
        lines += [
            f"{i},{s},{a}"
            for i, (s, a) in enumerate(zip(self.successes, self.max_accesses))
        ]
        return "\n".join(lines) + "\n"


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random((seed << 32) ^ trial)


def simulate_local_repair(
    c: LinearCode, p: LrcProfile, trials: int, seed: int = 0
) -> RepairReport:
    """For each trial, encode a random message, erase each coordinate in
    turn, and repair it locally.  Counts exact-recovery successes and the
    maximum number of symbols read per coordinate."""
    successes = [0] * c.n
    accesses = [0] * c.n
    for t in range(trials):
        rng = _trial_rng(seed, t)
        msg = [rng.randrange(4) for _ in range(c.k)]
        word = encode(c, msg)
        for pos in range(c.n):
            value, reads = repair_local(c, p, word, pos)
            if value == word[pos]:
                successes[pos] += 1
            accesses[pos] = max(accesses[pos], reads)
    return RepairReport(trials, tuple(successes), tuple(accesses))


@dataclass(frozen=True)
class ErasureReport:
    """Random erasure-set decoding statistics."""

    trials: int
    erasures: int
    successes: int

    @property
    def all_ok(self) -> bool:
        return self.successes == self.trials


def simulate_erasure_decoding(
    c: LinearCode, erasures: int, trials: int, seed: int = 0
) -> ErasureReport:
    """For each trial, encode a random message, erase a random coordinate
    set of the given size, decode, and require exact recovery."""
    if not 0 <= erasures < c.n:
        raise ValueError(f"erasure count must be in [0, n), got {erasures}")
    ok = 0
    for t in range(trials):
        rng = _trial_rng(seed, t)
        msg = [rng.randrange(4) for _ in range(c.k)]
        word = encode(c, msg)
        erased = set(rng.sample(range(c.n), erasures))
        received: list[Optional[int]] = [
            None if j in erased else word[j] for j in range(c.n)
        ]
        result = decode_erasures(c, received)
        if result.ok and list(result.word) == word:
            ok += 1
    return ErasureReport(trials, erasures, ok)
