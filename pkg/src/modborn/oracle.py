"""Independent reference paths: a global Born-rule box and a shot sampler.

The sampler uses numpy's Philox4x32-10 counter-based generator. Shots are cut
into fixed-size shards; shard ``k`` draws from
``Philox(SeedSequence([seed, k]))``, so a given ``(seed, shots)`` reproduces
the same counts on any platform, whatever the shard evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boxgen import conditional_tables
from .core import BehaviorBox, MeasurementConfig, ProbabilityRule, TwoQubitState, settings

SHARD_SIZE = 1 << 18
GENERATOR_NAME = "Philox4x32-10"


def born_box(psi: np.ndarray, alice_bases, bob_bases) -> BehaviorBox:
    """``|<phi_a (x) chi_b | psi>|^2`` for explicit eigenbases (columns)."""
    table = np.zeros((2, 2, 2, 2))
    for x, y in settings():
        for a in (0, 1):
            for b in (0, 1):
                ket = np.kron(alice_bases[x][:, a], bob_bases[y][:, b])
                table[x, y, a, b] = abs(np.vdot(ket, psi)) ** 2
    return BehaviorBox(table)


def born_oracle(state: TwoQubitState, cfg: MeasurementConfig) -> BehaviorBox:
    """Global Born-rule box: one projection onto product eigenstates, no collapse step."""
    return born_box(
        state.vector(),
        (cfg.alice_basis(0), cfg.alice_basis(1)),
        (cfg.bob_basis(0), cfg.bob_basis(1)),
    )


@dataclass(frozen=True)
class SampleResult:
    box: BehaviorBox
    stderr: np.ndarray  # (x, y, a, b)
    counts: np.ndarray  # (x, y, a, b)
    shots: int


def _shard_rng(seed: int, shard: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, shard])))


def _sample_shard(
    rng: np.random.Generator, size: int, pa: np.ndarray, cond: np.ndarray
) -> np.ndarray:
    counts = np.zeros((2, 2, 4), dtype=np.int64)
    for x, y in settings():
        a = (rng.random(size) >= pa[x, y, 0]).astype(np.int64)
        b = (rng.random(size) >= cond[x, y, a, 0]).astype(np.int64)
        counts[x, y] = np.bincount(2 * a + b, minlength=4)
    return counts


def mc_sampler(
    state: TwoQubitState,
    cfg: MeasurementConfig,
    rule: ProbabilityRule,
    shots: int,
    seed: int,
) -> SampleResult:
    """Simulate ``shots`` rounds of the sequential measurement per setting.

    Alice's outcome is drawn from her Born probabilities, then Bob's from the
    rule applied to his collapsed state. Standard errors are
    ``sqrt(p (1 - p) / shots)`` per cell.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots!r}")
    if seed < 0 or seed >= 1 << 64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    pa, cond = conditional_tables(state, cfg, rule)
    counts = np.zeros((2, 2, 4), dtype=np.int64)
    n_shards = -(-shots // SHARD_SIZE)
    for k in range(n_shards):
        size = min(SHARD_SIZE, shots - k * SHARD_SIZE)
        counts += _sample_shard(_shard_rng(seed, k), size, pa, cond)
    counts = counts.reshape(2, 2, 2, 2)
    freq = counts / shots
    stderr = np.sqrt(freq * (1.0 - freq) / shots)
    return SampleResult(BehaviorBox(freq), stderr, counts, shots)
