"""NumPy implementation of the cylinder-residual kernels.

Used when the compiled extension is unavailable (or disabled via
TUBEPOSE_PURE_PYTHON=1). Must stay numerically equivalent to
``_kernels.pyx``; both compute, for tilt angles (alpha, beta):

    d(alpha, beta) = [sin(b)cos(a), -sin(a), cos(b)cos(a)]
    D_j = || delta_j x d || = sqrt(||delta_j||^2 - (delta_j . d)^2)

and reduce |D_j - radius| (or its square) to a mean over the cloud,
where delta_j = axis_origin - point_j.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"

# Cap on the chunk of grid directions evaluated per GEMM, to bound the
# (n_points x chunk) temporary.
_CHUNK_ELEMS = 4_000_000


def _directions(alphas: np.ndarray, betas: np.ndarray) -> np.ndarray:
    """Axis directions for the full (alpha, beta) grid, shape (A*B, 3)."""
    ca, sa = np.cos(alphas), np.sin(alphas)
    cb, sb = np.cos(betas), np.sin(betas)
    d = np.empty((len(alphas), len(betas), 3))
    d[:, :, 0] = ca[:, None] * sb[None, :]
    d[:, :, 1] = -sa[:, None]
    d[:, :, 2] = ca[:, None] * cb[None, :]
    return d.reshape(-1, 3)


def residual_grid(
    deltas: np.ndarray,
    sq_norms: np.ndarray,
    radius: float,
    alphas: np.ndarray,
    betas: np.ndarray,
    squared: bool = False,
) -> np.ndarray:
    """Mean radial deviation for every grid pair, shape (len(alphas), len(betas))."""
    deltas = np.ascontiguousarray(deltas, dtype=float)
    sq_norms = np.asarray(sq_norms, dtype=float)
    alphas = np.atleast_1d(np.asarray(alphas, dtype=float))
    betas = np.atleast_1d(np.asarray(betas, dtype=float))
    dirs = _directions(alphas, betas)

    n_points = len(deltas)
    out = np.empty(len(dirs))
    chunk = max(1, _CHUNK_ELEMS // max(n_points, 1))
    for start in range(0, len(dirs), chunk):
        block = dirs[start : start + chunk]
        proj = deltas @ block.T
        dist = np.sqrt(np.maximum(sq_norms[:, None] - proj * proj, 0.0))
        dev = dist - radius
        if squared:
            out[start : start + chunk] = np.mean(dev * dev, axis=0)
        else:
            out[start : start + chunk] = np.mean(np.abs(dev), axis=0)
    return out.reshape(len(alphas), len(betas))


def residual_at(
    deltas: np.ndarray,
    sq_norms: np.ndarray,
    radius: float,
    alpha: float,
    beta: float,
    squared: bool = False,
) -> float:
    """Mean radial deviation for a single tilt pair."""
    ca, sa = np.cos(alpha), np.sin(alpha)
    cb, sb = np.cos(beta), np.sin(beta)
    d = np.array([ca * sb, -sa, ca * cb])
    proj = deltas @ d
    dist = np.sqrt(np.maximum(sq_norms - proj * proj, 0.0))
    dev = dist - radius
    if squared:
        return float(np.mean(dev * dev))
    return float(np.mean(np.abs(dev)))
