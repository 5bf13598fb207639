"""Dimension chains of rectangular Ginibre products.

A product ``A_1 A_2 ... A_m`` with ``A_r`` of shape ``n_r x n_{r+1}`` is
described by the chain ``dims = (n_1, ..., n_{m+1})``.  The product is square
of size ``n = n_1 = n_{m+1}`` and every interior dimension is at least ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import LengthError, RangeError, ShapeError
from .specfun import digamma


@dataclass(frozen=True)
class EnsembleSpec:
    dims: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.dims[0]

    @property
    def m(self) -> int:
        return len(self.dims) - 1

    @property
    def offsets(self) -> tuple[int, ...]:
        """Excess sizes ``l_r = n_r - n`` for the m factors (``l_1 = 0``)."""
        n = self.n
        return tuple(d - n for d in self.dims[:-1])

    @property
    def factor_dims(self) -> tuple[int, ...]:
        """``(n_1, ..., n_m)``, the row counts of the factors."""
        return self.dims[:-1]

    @property
    def delta_n(self) -> float:
        return delta_jk(self, self.n, 1.0)

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.dims) + ")"


def validate_spec(dims: Sequence[int]) -> EnsembleSpec:
    """Check a dimension chain and build the spec.

    >>> validate_spec([4, 6, 5, 4]).offsets
    (0, 2, 1)
    """
    dims = tuple(int(d) for d in dims)
    if len(dims) < 2:
        raise LengthError(f"need at least 2 dimensions, got {len(dims)}")
    for i, d in enumerate(dims):
        if d < 1:
            raise ShapeError(f"dims[{i}] = {d} is not a positive integer")
    n = dims[0]
    if dims[-1] != n:
        raise ShapeError(f"first and last dimensions differ ({n} != {dims[-1]})")
    for i, d in enumerate(dims[1:-1], start=1):
        if d < n:
            raise ShapeError(
                f"dims[{i}] = {d} is smaller than the product size n = {n}")
    return EnsembleSpec(dims)


def delta_jk(spec: EnsembleSpec, j: int, k: float) -> float:
    """Sum over factors of ``(j + l_r) ** -k`` for ``1 <= j <= n``, ``k > 0``."""
    if not 1 <= j <= spec.n:
        raise RangeError(f"j = {j} outside 1..{spec.n}")
    if not k > 0:
        raise RangeError(f"k = {k} must be positive")
    base = j + np.asarray(spec.offsets, dtype=float)
    # fsum keeps the result independent of summation order
    return math.fsum(1.0 / base ** float(k))


def psi_sum(spec: EnsembleSpec) -> float:
    """Sum of ``digamma(n_r)`` over the m factors."""
    return math.fsum(digamma(float(d)) for d in spec.factor_dims)


def log_dim_sum(spec: EnsembleSpec) -> float:
    """Sum of ``log(n_r)`` over the m factors."""
    return math.fsum(math.log(d) for d in spec.factor_dims)
