"""Observation-plane intensity maps for single-mode UCA excitations.

The transmit array is driven with equal amplitudes and a phase progression of
2*pi*m*l/N across elements; each element radiates a spherical wave. The
resulting beams are hollow (exact on-axis null for l != 0) and diverge faster
with mode order min(l, N - l); both effects show up directly in the maps.

Intensities are normalized to the mode-0 on-axis value of the same plane, so
maps of different modes are directly comparable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import Carrier
from .errors import InvalidInputError
from .geometry import ArrayGeometry, Pose, element_positions

DEFAULT_PLANE = 5.0
DEFAULT_EXTENT = 2.0
DEFAULT_RESOLUTION = 256


@dataclass(frozen=True)
class FieldMap:
    """Relative intensity |E|^2 on a square observation plane at z = plane_distance."""

    mode: int
    plane_distance: float
    extent: float
    intensity: np.ndarray

    def __post_init__(self):
        grid = np.asarray(self.intensity, dtype=float)
        if grid.ndim != 2 or grid.shape[0] != grid.shape[1]:
            raise InvalidInputError("intensity must be a square 2-D grid")
        grid.setflags(write=False)
        object.__setattr__(self, "intensity", grid)

    @property
    def resolution(self) -> int:
        return self.intensity.shape[0]

    @property
    def axis(self) -> np.ndarray:
        """Pixel-center coordinates along either plane axis, meters."""
        return np.linspace(-self.extent, self.extent, self.resolution)


def _tx_positions(geom: ArrayGeometry) -> np.ndarray:
    # pose is irrelevant for the transmit side; any valid one will do
    return element_positions(geom, Pose(axial_distance=1.0), "transmit")


def field_amplitude(geom: ArrayGeometry, carrier: Carrier, mode: int, points: np.ndarray) -> np.ndarray:
    """Complex field of the mode-l excitation at arbitrary points (..., 3)."""
    if not 0 <= mode < geom.element_count:
        raise InvalidInputError(f"mode must lie in [0, {geom.element_count}), got {mode!r}")
    txp = _tx_positions(geom)
    pts = np.asarray(points, dtype=float)
    d = np.linalg.norm(pts[..., None, :] - txp, axis=-1)
    lam = carrier.wavelength
    weights = np.exp(2j * np.pi * np.arange(geom.element_count) * mode / geom.element_count)
    weights /= np.sqrt(geom.element_count)
    return np.sum(weights * lam / (4.0 * np.pi * d) * np.exp(-2j * np.pi * d / lam), axis=-1)


def point_intensity(geom: ArrayGeometry, carrier: Carrier, mode: int, points: np.ndarray) -> np.ndarray:
    """Raw |E|^2 at arbitrary points, unnormalized."""
    return np.abs(field_amplitude(geom, carrier, mode, points)) ** 2


def on_axis_reference(geom: ArrayGeometry, carrier: Carrier, plane_distance: float) -> float:
    """Mode-0 on-axis intensity, the normalization reference of a plane."""
    return float(point_intensity(geom, carrier, 0, np.array([0.0, 0.0, plane_distance])))


def compute_field(
    geom: ArrayGeometry,
    carrier: Carrier,
    mode: int,
    plane_distance: float = DEFAULT_PLANE,
    extent: float = DEFAULT_EXTENT,
    resolution: int = DEFAULT_RESOLUTION,
) -> FieldMap:
    """Relative intensity map of one mode on the plane z = plane_distance."""
    if plane_distance <= 0:
        raise InvalidInputError(f"plane_distance must be > 0, got {plane_distance!r}")
    if extent <= 0:
        raise InvalidInputError(f"extent must be > 0, got {extent!r}")
    if resolution < 2:
        raise InvalidInputError(f"resolution must be >= 2, got {resolution!r}")
    axis = np.linspace(-extent, extent, resolution)
    xs, ys = np.meshgrid(axis, axis)
    points = np.stack([xs, ys, np.full_like(xs, plane_distance)], axis=-1)
    intensity = point_intensity(geom, carrier, mode, points)
    return FieldMap(
        mode=mode,
        plane_distance=plane_distance,
        extent=extent,
        intensity=intensity / on_axis_reference(geom, carrier, plane_distance),
    )


def azimuthal_profile(field_map: FieldMap, bins: int = 192) -> tuple[np.ndarray, np.ndarray]:
    """Mean intensity per radial bin: (bin-center radii, averages)."""
    axis = field_map.axis
    xs, ys = np.meshgrid(axis, axis)
    radii = np.hypot(xs, ys).ravel()
    edges = np.linspace(0.0, field_map.extent, bins + 1)
    idx = np.clip(np.digitize(radii, edges) - 1, 0, bins - 1)
    keep = radii <= field_map.extent  # drop the grid corners beyond the last ring
    sums = np.bincount(idx[keep], weights=field_map.intensity.ravel()[keep], minlength=bins)
    counts = np.bincount(idx[keep], minlength=bins)
    profile = np.divide(sums, counts, out=np.zeros(bins), where=counts > 0)
    return 0.5 * (edges[:-1] + edges[1:]), profile


def ring_radius(field_map: FieldMap, bins: int = 192) -> float:
    """Radius of the brightest ring: argmax of the azimuth-averaged profile."""
    radii, profile = azimuthal_profile(field_map, bins)
    return float(radii[np.argmax(profile)])


def captured_power(field_map: FieldMap, radius: float | None = None) -> float:
    """Relative power collected by a disk aperture centered on the axis.

    The default radius, half the map extent, comfortably contains the main
    ring of every mode while staying clear of the sampled square's edge.
    """
    if radius is None:
        radius = field_map.extent / 2.0
    axis = field_map.axis
    xs, ys = np.meshgrid(axis, axis)
    pixel_area = (axis[1] - axis[0]) ** 2
    inside = np.hypot(xs, ys) <= radius
    return float(field_map.intensity[inside].sum() * pixel_area)
