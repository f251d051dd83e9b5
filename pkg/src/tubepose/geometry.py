"""Pure geometric primitives: tilt-angle rotations, rigid transforms,
point-to-axis distances, 2D convex hulls, rectangle clipping and
minimum-area oriented rectangles.

All lengths are meters, all angles radians. Clouds and polygons are plain
float64 ndarrays; small value types are frozen dataclasses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateInput, InvalidParameter

ROTATION_TOL = 1e-9


def wrap_angle(angle: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    w = math.remainder(angle, math.tau)
    if w <= -math.pi:
        w += math.tau
    return w


@dataclass(frozen=True)
class TiltAngles:
    """Tilt of a tube axis: rotation about x (alpha) then y (beta).

    Angles are normalized into (-pi, pi] at construction; rotation about
    the tube's own symmetry axis is not represented.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise InvalidParameter("tilt angles must be finite")
        object.__setattr__(self, "alpha", wrap_angle(self.alpha))
        object.__setattr__(self, "beta", wrap_angle(self.beta))

    def as_array(self) -> np.ndarray:
        return np.array([self.alpha, self.beta])


def rotation_from_tilt(angles: TiltAngles) -> np.ndarray:
    """Rotation matrix Ry(beta) @ Rx(alpha) as a 3x3 float64 array."""
    ca, sa = math.cos(angles.alpha), math.sin(angles.alpha)
    cb, sb = math.cos(angles.beta), math.sin(angles.beta)
    return np.array([
        [cb, sb * sa, sb * ca],
        [0.0, ca, -sa],
        [-sb, cb * sa, cb * ca],
    ])


def axis_direction(angles: TiltAngles) -> np.ndarray:
    """Unit direction of the tilted z-axis (third rotation column)."""
    ca, sa = math.cos(angles.alpha), math.sin(angles.alpha)
    cb, sb = math.cos(angles.beta), math.sin(angles.beta)
    return np.array([sb * ca, -sa, cb * ca])


def tilt_from_axis(direction) -> TiltAngles:
    """Recover tilt angles from an axis direction.

    Total on nonzero vectors: alpha lands in [-pi/2, pi/2], which together
    with beta reproduces any unit direction.
    """
    d = np.asarray(direction, dtype=float)
    n = np.linalg.norm(d)
    if n == 0 or not np.all(np.isfinite(d)):
        raise InvalidParameter("axis direction must be a finite nonzero vector")
    d = d / n
    alpha = math.atan2(-d[1], math.hypot(d[0], d[2]))
    beta = math.atan2(d[0], d[2])
    return TiltAngles(alpha, beta)


def tilt_from_rotation(rotation: np.ndarray) -> TiltAngles:
    """Tilt angles of a rotation's z-column, ignoring spin about that axis."""
    return tilt_from_axis(np.asarray(rotation, dtype=float)[:, 2])


def point_axis_distance(angles: TiltAngles, point, origin) -> float:
    """Distance from ``point`` to the infinite line through ``origin``
    with direction ``axis_direction(angles)``: ||(origin - point) x d||.
    """
    p = np.asarray(point, dtype=float)
    o = np.asarray(origin, dtype=float)
    return float(np.linalg.norm(np.cross(o - p, axis_direction(angles))))


def is_rotation(matrix: np.ndarray, tol: float = ROTATION_TOL) -> bool:
    """True if ``matrix`` is orthonormal with determinant +1 within tol."""
    m = np.asarray(matrix, dtype=float)
    if m.shape != (3, 3) or not np.all(np.isfinite(m)):
        return False
    if not np.allclose(m.T @ m, np.eye(3), atol=tol):
        return False
    return abs(np.linalg.det(m) - 1.0) <= tol


@dataclass(frozen=True)
class RigidTransform:
    """Rotation plus translation, mapping body-frame points to the world."""

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        r = np.array(self.rotation, dtype=float)
        t = np.array(self.translation, dtype=float).reshape(3)
        if not is_rotation(r):
            raise InvalidParameter("rotation must be orthonormal with det +1")
        if not np.all(np.isfinite(t)):
            raise InvalidParameter("translation must be finite")
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", t)

    @classmethod
    def identity(cls) -> "RigidTransform":
        return cls(np.eye(3), np.zeros(3))

    @classmethod
    def from_matrix(cls, matrix) -> "RigidTransform":
        m = np.asarray(matrix, dtype=float)
        if m.shape != (4, 4):
            raise InvalidParameter("homogeneous transform must be 4x4")
        return cls(m[:3, :3], m[:3, 3])

    def matrix(self) -> np.ndarray:
        m = np.eye(4)
        m[:3, :3] = self.rotation
        m[:3, 3] = self.translation
        return m

    def apply(self, points) -> np.ndarray:
        """Transform one point (3,) or a cloud (N, 3)."""
        p = np.asarray(points, dtype=float)
        return p @ self.rotation.T + self.translation

    def compose(self, other: "RigidTransform") -> "RigidTransform":
        """self ∘ other: apply ``other`` first, then ``self``."""
        return RigidTransform(
            self.rotation @ other.rotation,
            self.rotation @ other.translation + self.translation,
        )

    def inverse(self) -> "RigidTransform":
        return RigidTransform(self.rotation.T, -(self.rotation.T @ self.translation))


def rotation_angle_deg(r_a: np.ndarray, r_b: np.ndarray) -> float:
    """Geodesic angle between two rotations, in degrees."""
    c = (np.trace(np.asarray(r_a).T @ np.asarray(r_b)) - 1.0) / 2.0
    return math.degrees(math.acos(min(1.0, max(-1.0, c))))


# ---------------------------------------------------------------------------
# 2D polygon machinery (hulls, clipping, minimum-area rectangles)
# ---------------------------------------------------------------------------


def polygon_area(vertices) -> float:
    """Signed shoelace area; positive for counter-clockwise vertex order."""
    v = np.asarray(vertices, dtype=float)
    if len(v) < 3:
        return 0.0
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def convex_hull_2d(points) -> np.ndarray:
    """Convex hull of 2D points via the monotone chain, CCW order.

    Raises DegenerateInput when fewer than 3 non-collinear points exist.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InvalidParameter("expected an (N, 2) array of 2D points")
    uniq = np.unique(pts, axis=0)
    if len(uniq) < 3:
        raise DegenerateInput("need at least 3 distinct points for a hull")
    order = np.lexsort((uniq[:, 1], uniq[:, 0]))
    sorted_pts = [tuple(p) for p in uniq[order]]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in sorted_pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(sorted_pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("points are collinear")
    return np.array(hull)


def polygon_clip(subject, x_min: float, x_max: float, y_min: float, y_max: float) -> np.ndarray:
    """Clip a convex CCW polygon against an axis-aligned rectangle
    (Sutherland-Hodgman, one half-plane per rectangle side).

    Returns the intersection polygon, possibly empty (shape (0, 2)).
    """
    poly = [tuple(p) for p in np.asarray(subject, dtype=float)]

    def clip_half_plane(vertices, inside, intersect):
        if not vertices:
            return []
        out = []
        prev = vertices[-1]
        prev_in = inside(prev)
        for cur in vertices:
            cur_in = inside(cur)
            if cur_in:
                if not prev_in:
                    out.append(intersect(prev, cur))
                out.append(cur)
            elif prev_in:
                out.append(intersect(prev, cur))
            prev, prev_in = cur, cur_in
        return out

    def cross_x(bound):
        def intersect(a, b):
            t = (bound - a[0]) / (b[0] - a[0])
            return (bound, a[1] + t * (b[1] - a[1]))
        return intersect

    def cross_y(bound):
        def intersect(a, b):
            t = (bound - a[1]) / (b[1] - a[1])
            return (a[0] + t * (b[0] - a[0]), bound)
        return intersect

    poly = clip_half_plane(poly, lambda p: p[0] >= x_min, cross_x(x_min))
    poly = clip_half_plane(poly, lambda p: p[0] <= x_max, cross_x(x_max))
    poly = clip_half_plane(poly, lambda p: p[1] >= y_min, cross_y(y_min))
    poly = clip_half_plane(poly, lambda p: p[1] <= y_max, cross_y(y_max))
    if len(poly) < 3:
        return np.empty((0, 2))
    return np.array(poly)


@dataclass(frozen=True)
class OrientedRect:
    """Oriented rectangle: center, half-extents along its own axes, yaw.

    ``yaw`` is the angle of the rectangle axis carrying ``half_extents[0]``.
    """

    center: np.ndarray
    half_extents: np.ndarray
    yaw: float

    corners: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))
        object.__setattr__(self, "half_extents", np.asarray(self.half_extents, dtype=float))
        c, s = math.cos(self.yaw), math.sin(self.yaw)
        u = np.array([c, s])
        v = np.array([-s, c])
        a, b = self.half_extents
        corners = np.array([
            self.center + a * u + b * v,
            self.center - a * u + b * v,
            self.center - a * u - b * v,
            self.center + a * u - b * v,
        ])
        object.__setattr__(self, "corners", corners)

    @property
    def area(self) -> float:
        return float(4.0 * self.half_extents[0] * self.half_extents[1])


def min_area_rect_2d(points) -> OrientedRect:
    """Minimum-area oriented rectangle containing all points.

    Rotating calipers over the convex hull: the optimal rectangle has one
    side collinear with a hull edge, so only hull-edge angles are tested.
    """
    hull = convex_hull_2d(points)
    edges = np.diff(np.vstack([hull, hull[:1]]), axis=0)
    angles = np.arctan2(edges[:, 1], edges[:, 0])

    best = None
    for theta in angles:
        c, s = math.cos(theta), math.sin(theta)
        rot = np.array([[c, s], [-s, c]])  # world -> edge frame
        local = hull @ rot.T
        lo = local.min(axis=0)
        hi = local.max(axis=0)
        extent = hi - lo
        area = float(extent[0] * extent[1])
        if best is None or area < best[0]:
            center_local = (lo + hi) / 2.0
            best = (area, theta, center_local, extent / 2.0)

    _, yaw, center_local, half = best
    c, s = math.cos(yaw), math.sin(yaw)
    rot = np.array([[c, -s], [s, c]])  # edge frame -> world
    return OrientedRect(rot @ center_local, half, wrap_angle(yaw))
