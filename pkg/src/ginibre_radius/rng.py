"""Replicate-indexed random streams.

Each replicate of an experiment owns one :class:`RngStream`.  The stream's
Philox key is a SeedSequence hash of ``(root_seed, replicate_index)``, so a
replicate's draws depend only on those two integers and never on which
thread, process or batch produced it.
"""

from __future__ import annotations

import numpy as np

_U64 = (1 << 64) - 1


class RngStream:
    """Deterministic counter-based generator for one replicate."""

    __slots__ = ("root_seed", "replicate_index", "_gen")

    def __init__(self, root_seed: int, replicate_index: int = 0):
        root_seed = int(root_seed)
        replicate_index = int(replicate_index)
        if not (0 <= root_seed <= _U64 and 0 <= replicate_index <= _U64):
            raise ValueError("root_seed and replicate_index must be unsigned 64-bit")
        self.root_seed = root_seed
        self.replicate_index = replicate_index
        seq = np.random.SeedSequence([root_seed, replicate_index])
        self._gen = np.random.Generator(np.random.Philox(seq))

    def __repr__(self):
        return f"RngStream(root_seed={self.root_seed}, replicate_index={self.replicate_index})"

    def uniform(self, size=None):
        """Uniform draws on [0, 1)."""
        return self._gen.random(size)

    def normal(self, size=None):
        return self._gen.standard_normal(size)

    def log_gamma(self, shapes) -> np.ndarray:
        """Logs of independent Gamma(shape, 1) draws, one per entry of ``shapes``.

        Marsaglia-Tsang squeeze/rejection, vectorised over the pending entries.
        Requires every shape >= 1.  Working in log space keeps products of
        thousands of draws representable.
        """
        shapes = np.asarray(shapes, dtype=float)
        if shapes.size and shapes.min() < 1.0:
            raise ValueError("log_gamma needs shapes >= 1")
        flat = shapes.ravel()
        d = flat - 1.0 / 3.0
        c = 1.0 / np.sqrt(9.0 * d)
        out = np.empty_like(flat)
        pending = np.arange(flat.size)
        while pending.size:
            dp, cp = d[pending], c[pending]
            x = self._gen.standard_normal(pending.size)
            u = self._gen.random(pending.size)
            v = 1.0 + cp * x
            valid = v > 0.0
            v = np.where(valid, v, 1.0)
            logv = 3.0 * np.log(v)
            v3 = v * v * v
            x2 = x * x
            squeeze = u < 1.0 - 0.0331 * x2 * x2
            with np.errstate(divide="ignore"):
                full = np.log(u) < 0.5 * x2 + dp * (1.0 - v3 + logv)
            accept = valid & (squeeze | full)
            out[pending[accept]] = np.log(dp[accept]) + logv[accept]
            pending = pending[~accept]
        return out.reshape(shapes.shape)

    def gamma(self, shapes) -> np.ndarray:
        return np.exp(self.log_gamma(shapes))
