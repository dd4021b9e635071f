"""Seeded, reproducible randomness built on numpy's PCG64 bit generator.

Stream-split rule: the child stream for shot ``i`` is the parent's PCG64
stream advanced by exactly ``i`` 64-bit outputs.  A float64 draw consumes
one output, so ``Rng(seed).uniforms(n)[i] == Rng(seed).child(i).uniform()``
bit-exactly.  Parallel shot execution partitioned by shot index therefore
reproduces the serial sequence regardless of scheduling.
"""

from __future__ import annotations

import numpy as np


class Rng:
    """Single-owner random stream; equal seeds yield bit-identical sequences."""

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._bit = np.random.PCG64(self.seed)
        self._gen = np.random.Generator(self._bit)

    @classmethod
    def _at_offset(cls, seed: int, offset: int) -> "Rng":
        obj = cls.__new__(cls)
        obj.seed = int(seed)
        obj._bit = np.random.PCG64(obj.seed)
        obj._bit.advance(int(offset))
        obj._gen = np.random.Generator(obj._bit)
        return obj

    def child(self, shot_index: int) -> "Rng":
        """Independent stream for one shot, derived from (seed, shot_index) only."""
        if shot_index < 0:
            raise ValueError("shot_index must be nonnegative")
        return Rng._at_offset(self.seed, shot_index)

    def uniform(self) -> float:
        """One float64 draw in [0, 1)."""
        return float(self._gen.random())

    def uniforms(self, n: int) -> np.ndarray:
        """``n`` float64 draws in [0, 1)."""
        return self._gen.random(int(n))

    def __repr__(self) -> str:  # pragma: no cover
        return f"Rng(seed={self.seed})"
