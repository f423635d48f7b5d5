"""Deterministic sharded execution of independent Monte-Carlo trials.

Trials are split into fixed-size shards, each shard owning a child
generator spawned from the master seed. The shard partition and seeding
depend only on the trial count and master seed, never on the worker
count, so serial and parallel runs produce identical results and
aggregation can happen in shard order regardless of completion order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

DEFAULT_SHARD_SIZE = 1 << 16


def shard_counts(trials: int, shard_size: int = DEFAULT_SHARD_SIZE) -> list[int]:
    """Partition ``trials`` into full shards plus one remainder shard."""
    if trials < 0:
        raise ValueError(f"trials must be >= 0, got {trials}")
    if shard_size <= 0:
        raise ValueError(f"shard_size must be > 0, got {shard_size}")
    counts = [shard_size] * (trials // shard_size)
    if trials % shard_size:
        counts.append(trials % shard_size)
    return counts


def run_sharded(
    worker,
    common_args: tuple,
    trials: int,
    rng=None,
    workers: int = 1,
    shard_size: int = DEFAULT_SHARD_SIZE,
) -> list:
    """Run ``worker(common_args, shard_rng, count)`` over every shard.

    Args:
        worker: top-level callable (must be picklable for workers > 1).
        common_args: static arguments forwarded to every shard.
        trials: total number of trials.
        rng: master seed or ``numpy.random.Generator``.
        workers: process count; 1 runs in-process.

    Returns:
        Worker results in shard order.
    """
    counts = shard_counts(trials, shard_size)
    master = np.random.default_rng(rng)
    shard_rngs = master.spawn(len(counts)) if counts else []
    if workers <= 1 or len(counts) <= 1:
        return [worker(common_args, g, c) for g, c in zip(shard_rngs, counts)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(
            pool.map(worker, [common_args] * len(counts), shard_rngs, counts)
        )
