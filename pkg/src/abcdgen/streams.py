"""Seeded random streams.

A single integer seed drives every random decision of a run.  The seed is fed
to :class:`numpy.random.SeedSequence` and spawned into one child stream per
pipeline phase, always in the order of :data:`PHASES`.  Adding draws to one
phase therefore never shifts the draws seen by another phase, and every
stream is a PCG64 generator, whose output is identical on every platform.
"""

from __future__ import annotations

import numpy as np

PHASES = ("degrees", "sizes", "assignment", "split", "clusters", "background")


def fresh_seed() -> int:
    """Draw a 64-bit seed from OS entropy."""
    return int(np.random.SeedSequence().generate_state(1, dtype=np.uint64)[0])


def phase_streams(seed: int) -> dict[str, np.random.Generator]:
    """Return one independent generator per phase name."""
    children = np.random.SeedSequence(seed).spawn(len(PHASES))
    return {name: np.random.Generator(np.random.PCG64(ss)) for name, ss in zip(PHASES, children)}


def as_generator(rng) -> np.random.Generator:
    """Accept a Generator, an int seed, or None."""
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


class UniformBuffer:
    """Buffered scalar draws from a Generator.

    Pulling uniforms one at a time from numpy costs microseconds per call;
    tight Python loops (switching, assignment) draw from a refilled block
    instead.  The sequence of values is a deterministic function of the
    generator state.
    """

    def __init__(self, rng: np.random.Generator, block: int = 4096):
        self._rng = rng
        self._block = block
        self._buf: list[float] = []
        self._pos = 0

    def random(self) -> float:
        if self._pos >= len(self._buf):
            self._buf = self._rng.random(self._block).tolist()
            self._pos = 0
        value = self._buf[self._pos]
        self._pos += 1
        return value

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        k = int(self.random() * n)
        return k if k < n else n - 1
