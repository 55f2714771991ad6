"""Seedable, splittable uniform streams.

Each stream is a Philox counter-based generator keyed by
``SeedSequence(seed, spawn_key=(stream_id,))``.  Streams sharing a seed but
with different ``stream_id`` values get independent keys, so batches can be
produced in parallel and concatenated in stream order.
"""

from __future__ import annotations

import numpy as np

__all__ = ["RngStream", "uniform"]

_U64 = 2**64
_TWO_NEG_53 = 2.0**-53


class RngStream:
    """Reproducible source of uniform and normal variates.

    A stream is mutable state owned by one caller; do not share it between
    threads.  Create one stream per worker instead.
    """

    def __init__(self, seed: int = 0, stream_id: int = 0):
        seed, stream_id = int(seed), int(stream_id)
        if not (0 <= seed < _U64 and 0 <= stream_id < _U64):
            raise ValueError("seed and stream_id must be unsigned 64-bit integers")
        self.seed = seed
        self.stream_id = stream_id
        seq = np.random.SeedSequence(seed, spawn_key=(stream_id,))
        self._gen = np.random.Generator(np.random.Philox(seq))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"

    def uniform(self, size=None):
        """Uniform variates strictly inside ``(0, 1)``.

        Built from 53 random bits ``k`` as ``(k + 0.5) / 2**53``, so neither
        endpoint can occur and ``log(u)`` is always finite.
        """
        k = self._gen.integers(0, 2**53, size=size, dtype=np.uint64)
        u = (k.astype(np.float64) + 0.5) * _TWO_NEG_53
        return float(u) if size is None else u

    def log_uniform(self, size=None):
        return np.log(self.uniform(size))

    def normal(self, size=None):
        return self._gen.standard_normal(size)


def uniform(stream: RngStream) -> float:
    """One uniform draw in ``(0, 1)`` from ``stream``."""
    return stream.uniform()
