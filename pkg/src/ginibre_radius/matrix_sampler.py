"""Direct simulation: sample the rectangular factors, multiply, take eigenvalues.

Matrices are plain ``complex128`` numpy arrays.  This path is the validation
route for the Gamma representation; it is cubic in ``n`` and capped at
``n <= 64`` for the full eigensolver.
"""

from __future__ import annotations

import math

import numpy as np

from .ensemble import EnsembleSpec
from .errors import ConvergenceError, SizeError, ZeroError
from .parallel import map_replicates
from .repr_sampler import Estimator, LogRadiusSample, check_budget
from .rng import RngStream

FULL_SOLVER_CAP = 64
_SQRT_HALF = math.sqrt(0.5)


def sample_ginibre_block(rows: int, cols: int, rng: RngStream) -> np.ndarray:
    """``rows x cols`` matrix of i.i.d. standard complex normals (E|g|^2 = 1)."""
    parts = rng.normal((rows, cols, 2)) * _SQRT_HALF
    return parts[..., 0] + 1j * parts[..., 1]


def product_chain(spec: EnsembleSpec, rng: RngStream) -> np.ndarray:
    """Sample ``A_1, ..., A_m`` in order and return ``A_1 @ ... @ A_m``."""
    dims = spec.dims
    prod = sample_ginibre_block(dims[0], dims[1], rng)
    with np.errstate(over="ignore", invalid="ignore"):
        for r in range(1, spec.m):
            prod = prod @ sample_ginibre_block(dims[r], dims[r + 1], rng)
    if not np.all(np.isfinite(prod)):
        raise OverflowError(f"product of {spec.m} factors left the float range")
    return prod


def _check_square(mat: np.ndarray):
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise SizeError(f"need a square matrix, got shape {mat.shape}")


def spectral_radius_full(mat: np.ndarray, cap: int = FULL_SOLVER_CAP) -> float:
    """Largest eigenvalue modulus from the dense LAPACK eigensolver."""
    mat = np.asarray(mat, dtype=complex)
    _check_square(mat)
    if mat.shape[0] > cap:
        raise SizeError(f"{mat.shape[0]}x{mat.shape[0]} exceeds the full-solver cap {cap}")
    try:
        eig = np.linalg.eigvals(mat)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(str(exc)) from exc
    return float(np.abs(eig).max())


def spectral_radius_power(mat: np.ndarray, rng: RngStream, *, tol: float = 1e-10,
                          max_iter: int = 5000) -> float:
    """Dominant eigenvalue modulus by power iteration.

    Converged when the Rayleigh quotient changes by less than ``tol``
    (relative) and the residual ``|Av - lam v|`` is below ``tol * |lam|``.
    Tied dominant moduli never converge and raise ``ConvergenceError``.
    """
    mat = np.asarray(mat, dtype=complex)
    _check_square(mat)
    n = mat.shape[0]
    v = rng.normal((n, 2)) @ np.array([1.0, 1j])
    v /= np.linalg.norm(v)
    lam_prev = None
    for _ in range(max_iter):
        w = mat @ v
        norm_w = np.linalg.norm(w)
        if norm_w == 0.0:
            return 0.0
        if not np.isfinite(norm_w) or norm_w < np.finfo(float).tiny:
            raise ZeroError("power iterate underflowed")
        lam = np.vdot(v, w)
        if lam_prev is not None and abs(lam) > 0:
            change = abs(lam - lam_prev) / abs(lam)
            resid = np.linalg.norm(w - lam * v)
            if change <= tol and resid <= tol * abs(lam):
                return float(abs(lam))
        lam_prev = lam
        v = w / norm_w
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def sample_log_radius_direct(spec: EnsembleSpec, rng: RngStream,
                             method: str = "full") -> LogRadiusSample:
    """Log spectral radius of one sampled product; ``method`` is "full" or "power"."""
    if method not in ("full", "power"):
        raise ValueError(f"unknown method {method!r}")
    if method == "full" and spec.n > FULL_SOLVER_CAP:
        raise SizeError(f"n = {spec.n} exceeds the full-solver cap {FULL_SOLVER_CAP}")
    mat = product_chain(spec, rng)
    fallback = False
    if method == "full":
        radius = spectral_radius_full(mat)
        estimator = Estimator.DIRECT_FULL
    else:
        estimator = Estimator.DIRECT_POWER
        try:
            radius = spectral_radius_power(mat, rng)
        except ConvergenceError:
            if spec.n > FULL_SOLVER_CAP:
                raise
            radius = spectral_radius_full(mat)
            fallback = True
    with np.errstate(divide="ignore"):
        log_radius = float(np.log(radius))
    return LogRadiusSample(log_radius, rng.replicate_index, estimator, rng.root_seed, fallback)


def sample_batch_direct(spec: EnsembleSpec, replicates: int, root_seed: int, *,
                        method: str = "full", threads: int = 1,
                        index_offset: int = 0) -> list[LogRadiusSample]:
    if replicates < 1:
        raise ValueError("replicates must be >= 1")
    if method == "full" and spec.n > FULL_SOLVER_CAP:
        raise SizeError(f"n = {spec.n} exceeds the full-solver cap {FULL_SOLVER_CAP}")
    check_budget(spec, replicates)

    def one(index):
        return sample_log_radius_direct(spec, RngStream(root_seed, index), method)

    return map_replicates(one, range(index_offset, index_offset + replicates), threads)
