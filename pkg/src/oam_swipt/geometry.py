"""3-D element positions for transmit and receive uniform circular arrays.

The transmit array lies in the z=0 plane, centered on the origin. The receive
array is a congruent circle centered at (lateral_offset, 0, axial_distance);
its plane normal is the z-axis rotated by ``tilt`` about the y-axis, so both
misalignment parameters live in the x-z plane. Element m of either array sits
at angle 2*pi*m/N measured from the (rotated) x-axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

_SIDES = ("transmit", "receive")


@dataclass(frozen=True)
class ArrayGeometry:
    """A uniform circular array: ``element_count`` elements on a circle of ``radius`` meters."""

    element_count: int
    radius: float

    def __post_init__(self):
        if int(self.element_count) != self.element_count or self.element_count < 1:
            raise InvalidInputError(
                f"element_count must be a positive integer, got {self.element_count!r}"
            )
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise InvalidInputError(f"radius must be positive and finite, got {self.radius!r}")

    @property
    def element_angles(self) -> np.ndarray:
        """Element azimuths, exactly 2*pi/N apart."""
        n = self.element_count
        return 2.0 * np.pi * np.arange(n) / n


@dataclass(frozen=True)
class Pose:
    """Placement of the receive array relative to the transmit array.

    axial_distance: center-to-center distance D along z, meters.
    lateral_offset: offset d_x of the receive center along +x, meters.
    tilt: rotation theta_x of the receive plane normal about the y-axis, radians.
    """

    axial_distance: float
    lateral_offset: float = 0.0
    tilt: float = 0.0

    def __post_init__(self):
        for name in ("axial_distance", "lateral_offset", "tilt"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidInputError(f"{name} must be finite, got {getattr(self, name)!r}")
        if self.axial_distance <= 0:
            raise InvalidInputError(f"axial_distance must be > 0, got {self.axial_distance!r}")
        if self.lateral_offset < 0:
            raise InvalidInputError(f"lateral_offset must be >= 0, got {self.lateral_offset!r}")
        if not 0 <= self.tilt < np.pi / 2:
            raise InvalidInputError(f"tilt must lie in [0, pi/2), got {self.tilt!r}")

    @property
    def receive_center(self) -> np.ndarray:
        return np.array([self.lateral_offset, 0.0, self.axial_distance])

    @property
    def aligned(self) -> bool:
        return self.lateral_offset == 0.0 and self.tilt == 0.0


def element_positions(geom: ArrayGeometry, pose: Pose, side: str) -> np.ndarray:
    """Element positions of one array, shape (N, 3), meters.

    Transmit elements: (R*cos(2*pi*m/N), R*sin(2*pi*m/N), 0).
    Receive elements: the same circle carried to the receive center, with the
    in-plane x-axis rotated by the pose tilt about y (element 0 on that axis).
    """
    if side not in _SIDES:
        raise InvalidInputError(f"side must be one of {_SIDES}, got {side!r}")
    angles = geom.element_angles
    cos_a = geom.radius * np.cos(angles)
    sin_a = geom.radius * np.sin(angles)
    if side == "transmit":
        return np.stack([cos_a, sin_a, np.zeros_like(cos_a)], axis=1)
    in_plane_x = np.array([np.cos(pose.tilt), 0.0, -np.sin(pose.tilt)])
    in_plane_y = np.array([0.0, 1.0, 0.0])
    return pose.receive_center + cos_a[:, None] * in_plane_x + sin_a[:, None] * in_plane_y


def siso_positions(pose: Pose) -> tuple[np.ndarray, np.ndarray]:
    """Single-antenna transceiver points: array centers, tilt does not move them."""
    return np.zeros(3), pose.receive_center


def chord_lengths(geom: ArrayGeometry) -> np.ndarray:
    """Pairwise in-array distances 2*R*sin(pi*|m-n|/N), indexed by |m-n| mod N."""
    n = geom.element_count
    return 2.0 * geom.radius * np.sin(np.pi * np.arange(n) / n)
