"""Rack geometry: the slot grid, the top plate, and the analytic
registration template sampled from it.

The rack frame has its origin at the center of the slot grid, z up;
slot bottoms sit at z = top_height - slot_depth. The top plate carries
asymmetric margins (a wider tab on one side, as physical racks have) so
that a 180-degree yaw flip is geometrically distinguishable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import IndexOutOfRange, InvalidParameter


@dataclass(frozen=True)
class RackModel:
    """Slot-grid geometry plus top-surface template parameters.

    half_length / half_width are the slot half-extents along rack x / y;
    slot_depth is the hole depth below the top surface.
    """

    half_length: float = 0.0125
    half_width: float = 0.0125
    slot_depth: float = 0.020
    rows: int = 4
    cols: int = 6
    pitch_x: float = 0.030
    pitch_y: float = 0.030
    top_height: float = 0.020
    # plate margin beyond the outermost slot edges: (x_neg, x_pos, y_neg, y_pos)
    margins: tuple[float, float, float, float] = (0.006, 0.006, 0.006, 0.012)
    template_density: float = 4.0e5
    template_seed: int = 0

    _template: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if min(self.half_length, self.half_width, self.slot_depth) <= 0:
            raise InvalidParameter("slot dimensions must be positive")
        if self.rows < 1 or self.cols < 1:
            raise InvalidParameter("grid must have at least one slot")
        if min(self.pitch_x, self.pitch_y) <= 0:
            raise InvalidParameter("slot pitches must be positive")
        if self.pitch_x < 2 * self.half_length or self.pitch_y < 2 * self.half_width:
            raise InvalidParameter("slot pitch smaller than slot size; holes overlap")
        if any(m < 0 for m in self.margins) or self.template_density <= 0:
            raise InvalidParameter("margins must be >= 0 and template density > 0")
        object.__setattr__(self, "_template", None)

    # -- slot grid ----------------------------------------------------------

    @property
    def n_slots(self) -> int:
        return self.rows * self.cols

    @property
    def slot_centers(self) -> np.ndarray:
        """(rows*cols, 2) slot centers in the rack frame, row-major order."""
        xs = (np.arange(self.cols) - (self.cols - 1) / 2.0) * self.pitch_x
        ys = (np.arange(self.rows) - (self.rows - 1) / 2.0) * self.pitch_y
        gx, gy = np.meshgrid(xs, ys)  # index [row, col]
        return np.column_stack([gx.ravel(), gy.ravel()])

    def slot_center(self, slot_index: int) -> np.ndarray:
        if not 0 <= slot_index < self.n_slots:
            raise IndexOutOfRange(f"slot index {slot_index} not in [0, {self.n_slots})")
        row, col = divmod(slot_index, self.cols)
        return np.array([
            (col - (self.cols - 1) / 2.0) * self.pitch_x,
            (row - (self.rows - 1) / 2.0) * self.pitch_y,
        ])

    def slot_rect(self, slot_index: int) -> tuple[float, float, float, float]:
        """Slot hole rectangle (x_min, x_max, y_min, y_max) in the rack frame."""
        cx, cy = self.slot_center(slot_index)
        return (
            cx - self.half_length,
            cx + self.half_length,
            cy - self.half_width,
            cy + self.half_width,
        )

    # -- top plate ----------------------------------------------------------

    @property
    def plate_bounds(self) -> tuple[float, float, float, float]:
        """Top plate rectangle (x_min, x_max, y_min, y_max) in the rack frame."""
        gx = (self.cols - 1) * self.pitch_x / 2.0
        gy = (self.rows - 1) * self.pitch_y / 2.0
        mx_neg, mx_pos, my_neg, my_pos = self.margins
        return (
            -(gx + self.half_length + mx_neg),
            gx + self.half_length + mx_pos,
            -(gy + self.half_width + my_neg),
            gy + self.half_width + my_pos,
        )

    @property
    def plate_center(self) -> np.ndarray:
        x_min, x_max, y_min, y_max = self.plate_bounds
        return np.array([(x_min + x_max) / 2.0, (y_min + y_max) / 2.0])

    @property
    def plate_half_extents(self) -> np.ndarray:
        x_min, x_max, y_min, y_max = self.plate_bounds
        return np.array([(x_max - x_min) / 2.0, (y_max - y_min) / 2.0])

    @property
    def free_top_area(self) -> float:
        """Plate area minus the slot holes."""
        x_min, x_max, y_min, y_max = self.plate_bounds
        plate = (x_max - x_min) * (y_max - y_min)
        holes = self.n_slots * (2 * self.half_length) * (2 * self.half_width)
        return plate - holes

    def points_in_holes(self, points_xy) -> np.ndarray:
        """Boolean mask of 2D rack-frame points lying inside any slot hole.

        Holes never overlap (pitch >= slot size), so only the nearest
        grid cell needs checking.
        """
        pts = np.asarray(points_xy, dtype=float)
        col = np.clip(
            np.rint(pts[:, 0] / self.pitch_x + (self.cols - 1) / 2.0), 0, self.cols - 1
        )
        row = np.clip(
            np.rint(pts[:, 1] / self.pitch_y + (self.rows - 1) / 2.0), 0, self.rows - 1
        )
        cx = (col - (self.cols - 1) / 2.0) * self.pitch_x
        cy = (row - (self.rows - 1) / 2.0) * self.pitch_y
        return (np.abs(pts[:, 0] - cx) <= self.half_length) & (
            np.abs(pts[:, 1] - cy) <= self.half_width
        )

    def sample_top_surface(self, density: float, rng: np.random.Generator) -> np.ndarray:
        """Uniform noiseless samples on the top plate excluding slot holes,
        in the rack frame. Point count is round(density * free area).
        """
        if density <= 0:
            raise InvalidParameter("density must be positive")
        x_min, x_max, y_min, y_max = self.plate_bounds
        target = max(1, int(round(density * self.free_top_area)))
        kept: list[np.ndarray] = []
        total = 0
        while total < target:
            n = max(256, 2 * (target - total))
            xy = np.column_stack([
                rng.uniform(x_min, x_max, n),
                rng.uniform(y_min, y_max, n),
            ])
            xy = xy[~self.points_in_holes(xy)]
            kept.append(xy)
            total += len(xy)
        xy = np.vstack(kept)[:target]
        return np.column_stack([xy, np.full(len(xy), self.top_height)])

    @property
    def template(self) -> np.ndarray:
        """Analytic top-surface template cloud (rack frame), built lazily
        from (template_density, template_seed) and cached.
        """
        if self._template is None:
            rng = np.random.default_rng(self.template_seed)
            cloud = self.sample_top_surface(self.template_density, rng)
            object.__setattr__(self, "_template", cloud)
        return self._template

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "half_length": self.half_length,
            "half_width": self.half_width,
            "slot_depth": self.slot_depth,
            "rows": self.rows,
            "cols": self.cols,
            "pitch_x": self.pitch_x,
            "pitch_y": self.pitch_y,
            "top_height": self.top_height,
            "margins": list(self.margins),
            "template_density": self.template_density,
            "template_seed": self.template_seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RackModel":
        kwargs = dict(data)
        if "margins" in kwargs:
            kwargs["margins"] = tuple(kwargs["margins"])
        return cls(**kwargs)
