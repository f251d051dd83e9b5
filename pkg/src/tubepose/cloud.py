"""Point-cloud containers and preprocessing filters.

A cloud is a float64 ndarray of shape (N, 3), world units in meters.
"""

from __future__ import annotations

import numpy as np
from scipy.spatial import cKDTree

from .errors import InvalidParameter


def as_cloud(points, allow_empty: bool = True) -> np.ndarray:
    """Coerce to an (N, 3) float64 array, rejecting NaN/Inf coordinates."""
    cloud = np.asarray(points, dtype=float)
    if cloud.size == 0:
        cloud = cloud.reshape(0, 3)
    if cloud.ndim != 2 or cloud.shape[1] != 3:
        raise InvalidParameter(f"expected an (N, 3) cloud, got shape {cloud.shape}")
    if not allow_empty and len(cloud) == 0:
        raise InvalidParameter("cloud must be non-empty")
    if not np.all(np.isfinite(cloud)):
        raise InvalidParameter("cloud contains NaN or Inf coordinates")
    return cloud


def drop_nonfinite(points) -> np.ndarray:
    """Remove rows containing NaN/Inf; raw sensor data may carry them."""
    cloud = np.asarray(points, dtype=float).reshape(-1, 3)
    return cloud[np.all(np.isfinite(cloud), axis=1)]


def voxel_downsample(cloud, voxel: float) -> np.ndarray:
    """Replace all points in each voxel cell by their centroid.

    The grid is anchored at the coordinate origin, so results do not
    depend on the cloud's bounding box. Output is ordered by cell index.
    """
    if not (voxel > 0):
        raise InvalidParameter("voxel size must be positive")
    pts = as_cloud(cloud)
    if len(pts) == 0:
        return pts
    cells = np.floor(pts / voxel).astype(np.int64)
    _, inverse, counts = np.unique(cells, axis=0, return_inverse=True, return_counts=True)
    sums = np.zeros((len(counts), 3))
    np.add.at(sums, inverse, pts)
    return sums / counts[:, None]


def remove_outliers(cloud, k: int = 20, std_ratio: float = 2.0) -> np.ndarray:
    """Statistical outlier filter.

    Drops points whose mean distance to their k nearest neighbors is
    strictly greater than (global mean + std_ratio * global std) of those
    per-point means. Output is a subset of the input, order preserved.
    """
    if k < 1:
        raise InvalidParameter("k must be at least 1")
    if std_ratio < 0:
        raise InvalidParameter("std_ratio must be non-negative")
    pts = as_cloud(cloud)
    if len(pts) <= k:
        raise InvalidParameter(f"cloud must have more than k={k} points")
    tree = cKDTree(pts)
    dists, _ = tree.query(pts, k=k + 1)  # first column is the point itself
    mean_dist = dists[:, 1:].mean(axis=1)
    threshold = mean_dist.mean() + std_ratio * mean_dist.std()
    return pts[mean_dist <= threshold]
