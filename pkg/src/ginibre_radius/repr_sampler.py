"""Exact sampler of the spectral radius through independent Gamma variables.

For the product ensemble with offsets ``l_r``, the squared spectral radius has
the law of ``max_j prod_r s_{j,r}`` where the ``s_{j,r}`` are independent with
``s_{j,r} ~ Gamma(j + l_r, 1)``, ``j = 1..n``, ``r = 1..m``.  Everything is
accumulated in log space, so the cost is ``n * m`` draws per replicate and
nothing overflows however large ``m`` gets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .ensemble import EnsembleSpec
from .errors import CapacityError
from .parallel import map_replicates
from .rng import RngStream

DEFAULT_DRAW_BUDGET = 10**10


class Estimator(enum.Enum):
    REPRESENTATION = "representation"
    DIRECT_FULL = "direct-full"
    DIRECT_POWER = "direct-power"


@dataclass(frozen=True)
class LogRadiusSample:
    log_radius: float
    replicate_index: int
    estimator: Estimator
    root_seed: int
    # set when a power-iteration failure was resolved by the full eigensolver
    fallback: bool = False


def sample_gamma_int(shape: int, rng: RngStream) -> float:
    """One Gamma(shape, 1) draw for an integer ``shape >= 1``."""
    if shape < 1:
        raise ValueError(f"shape must be >= 1, got {shape}")
    return float(rng.gamma(np.array([float(shape)]))[0])


def gamma_shapes(spec: EnsembleSpec, shape_shift: int = 0) -> np.ndarray:
    """``(n, m)`` array of Gamma shapes ``j + l_r``.

    ``shape_shift`` is a test hook that deliberately corrupts the law.
    """
    j = np.arange(1, spec.n + 1, dtype=float)[:, None]
    return j + np.asarray(spec.offsets, dtype=float)[None, :] + shape_shift


def sample_log_radius_repr(spec: EnsembleSpec, rng: RngStream, *,
                           shapes: np.ndarray | None = None) -> LogRadiusSample:
    if shapes is None:
        shapes = gamma_shapes(spec)
    log_g = rng.log_gamma(shapes).sum(axis=1)
    return LogRadiusSample(
        log_radius=0.5 * float(log_g.max()),
        replicate_index=rng.replicate_index,
        estimator=Estimator.REPRESENTATION,
        root_seed=rng.root_seed,
    )


def check_budget(spec: EnsembleSpec, replicates: int, budget: int = DEFAULT_DRAW_BUDGET):
    draws = replicates * spec.n * spec.m
    if draws > budget:
        raise CapacityError(
            f"{replicates} replicates of {spec} need {draws:.3g} draws, budget is {budget:.3g}")


def sample_batch_repr(spec: EnsembleSpec, replicates: int, root_seed: int, *,
                      threads: int = 1, index_offset: int = 0,
                      budget: int = DEFAULT_DRAW_BUDGET,
                      shape_shift: int = 0) -> list[LogRadiusSample]:
    """Replicate ``i`` uses ``RngStream(root_seed, index_offset + i)``."""
    if replicates < 1:
        raise ValueError("replicates must be >= 1")
    check_budget(spec, replicates, budget)
    shapes = gamma_shapes(spec, shape_shift)

    def one(index):
        return sample_log_radius_repr(spec, RngStream(root_seed, index), shapes=shapes)

    return map_replicates(one, range(index_offset, index_offset + replicates), threads)


def log_radii(samples) -> np.ndarray:
    return np.array([s.log_radius for s in samples], dtype=float)
