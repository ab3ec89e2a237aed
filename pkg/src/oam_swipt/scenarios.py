"""Named experiment scenarios and their configuration.

Defaults reproduce the reference setup: two 8-element UCAs of radius 0.1 m,
5 m apart, 28 GHz carrier, 40 dBm/Hz transmit power, -20 dBm/Hz channel
noise, conversion noise 0.05 of the channel noise, unit conversion
efficiency, 1 Hz bandwidth, 100000 Monte Carlo samples.

Scenarios:
  fig2   sweep conversion-noise ratio {0.05, 0.5, 5} at D = 5 m, aligned
  fig3   sweep distance {5, 10, 15} m at ratio 0.05
  fig5   sweep transceiver misalignment (lateral offset, tilt) pairs
  field  intensity maps for mode orders 0-4
  custom single case at the configured point, all baselines available
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

import numpy as np

from . import field_map as fm
from .channel import Carrier, build_channel, los_gain
from .errors import ConfigError
from .geometry import ArrayGeometry, Pose, element_positions, siso_positions
from .re_region import RERegion, trace_monte_carlo
from .swipt import (
    LinkBudget,
    ModeChannel,
    REEvaluator,
    mimo_svd_evaluator,
    mimo_zf_evaluator,
    oam_evaluator,
    siso_evaluator,
)

SCENARIOS = ("fig2", "fig3", "fig5", "field", "custom")
BASELINES = ("oam", "mimo-svd", "mimo-zf", "siso")
FORMATS = ("csv", "json", "svg")

_DEFAULT_BASELINES = {
    "fig2": ("oam", "mimo-zf", "siso"),
    "fig3": ("oam", "mimo-zf", "siso"),
    "fig5": ("oam", "siso"),
    "custom": BASELINES,
    "field": (),
}


@dataclass(frozen=True)
class ScenarioConfig:
    """Fully resolved parameters of one run; echoed verbatim into every output."""

    scenario: str
    element_count: int = 8
    radius_m: float = 0.1
    distance_m: float = 5.0
    frequency_hz: float = 28e9
    tx_power_dbm_hz: float = 40.0
    noise_dbm_hz: float = -20.0
    conversion_noise_ratio: float = 0.05
    conversion_efficiency: float = 1.0
    bandwidth_hz: float = 1.0
    lateral_offset_m: float = 0.0
    tilt_deg: float = 0.0
    samples: int = 100_000
    seed: int = 0
    grid_size: int = 200
    workers: int = 1
    baselines: tuple[str, ...] = ()
    formats: tuple[str, ...] = ("csv", "json", "svg")
    out_dir: str = "results"
    conversion_noise_ratios: tuple[float, ...] = (0.05, 0.5, 5.0)
    distances_m: tuple[float, ...] = (5.0, 10.0, 15.0)
    offsets_m: tuple[float, ...] = (0.0, 0.5, 1.0)
    tilts_deg: tuple[float, ...] = (0.0, 5.0, 10.0)
    sweep_mode: str = "joint"
    field_modes: tuple[int, ...] = (0, 1, 2, 3, 4)
    plane_m: float = 5.0
    extent_m: float = 2.0
    resolution: int = 256

    def __post_init__(self):
        if not self.baselines:
            object.__setattr__(self, "baselines", _DEFAULT_BASELINES.get(self.scenario, BASELINES))
        self.validate()

    def validate(self):
        def positive(key, value):
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ConfigError(f"must be > 0, got {value!r}", key)

        if self.scenario not in SCENARIOS:
            raise ConfigError(f"unknown scenario {self.scenario!r}, expected one of {SCENARIOS}", "scenario")
        if int(self.element_count) != self.element_count or self.element_count < 1:
            raise ConfigError(f"must be a positive integer, got {self.element_count!r}", "element_count")
        positive("radius_m", self.radius_m)
        positive("distance_m", self.distance_m)
        positive("frequency_hz", self.frequency_hz)
        positive("conversion_efficiency", self.conversion_efficiency)
        positive("bandwidth_hz", self.bandwidth_hz)
        if self.conversion_efficiency > 1:
            raise ConfigError(f"must lie in (0, 1], got {self.conversion_efficiency!r}", "conversion_efficiency")
        if self.conversion_noise_ratio < 0:
            raise ConfigError(f"must be >= 0, got {self.conversion_noise_ratio!r}", "conversion_noise_ratio")
        if self.lateral_offset_m < 0:
            raise ConfigError(f"must be >= 0, got {self.lateral_offset_m!r}", "lateral_offset_m")
        if not 0 <= self.tilt_deg < 90:
            raise ConfigError(f"must lie in [0, 90), got {self.tilt_deg!r}", "tilt_deg")
        if self.samples < 1:
            raise ConfigError(f"must be >= 1, got {self.samples!r}", "samples")
        if self.seed < 0:
            raise ConfigError(f"must be >= 0, got {self.seed!r}", "seed")
        if self.grid_size < 2:
            raise ConfigError(f"must be >= 2, got {self.grid_size!r}", "grid_size")
        if self.workers < 1:
            raise ConfigError(f"must be >= 1, got {self.workers!r}", "workers")
        for b in self.baselines:
            if b not in BASELINES:
                raise ConfigError(f"unknown baseline {b!r}, expected subset of {BASELINES}", "baselines")
        for f in self.formats:
            if f not in FORMATS:
                raise ConfigError(f"unknown format {f!r}, expected subset of {FORMATS}", "formats")
        for key in ("conversion_noise_ratios", "distances_m", "offsets_m", "tilts_deg"):
            values = getattr(self, key)
            if len(values) == 0:
                raise ConfigError("must not be empty", key)
            floor = 0.0 if key in ("offsets_m", "conversion_noise_ratios", "tilts_deg") else None
            for v in values:
                if not math.isfinite(v) or (floor is not None and v < floor) or (floor is None and v <= 0):
                    raise ConfigError(f"invalid entry {v!r}", key)
        if any(t >= 90 for t in self.tilts_deg):
            raise ConfigError("tilts must lie in [0, 90) degrees", "tilts_deg")
        if self.sweep_mode not in ("joint", "product"):
            raise ConfigError(f"must be 'joint' or 'product', got {self.sweep_mode!r}", "sweep_mode")
        if self.sweep_mode == "joint" and len(self.offsets_m) != len(self.tilts_deg):
            raise ConfigError(
                f"joint sweep needs offsets_m and tilts_deg of equal length, "
                f"got {len(self.offsets_m)} and {len(self.tilts_deg)}",
                "sweep_mode",
            )
        for mode in self.field_modes:
            if int(mode) != mode or not 0 <= mode < self.element_count:
                raise ConfigError(
                    f"modes must be integers in [0, {self.element_count}), got {mode!r}", "field_modes"
                )
        positive("plane_m", self.plane_m)
        positive("extent_m", self.extent_m)
        if self.resolution < 2:
            raise ConfigError(f"must be >= 2, got {self.resolution!r}", "resolution")

    def budget(self, conversion_noise_ratio: float | None = None) -> LinkBudget:
        ratio = self.conversion_noise_ratio if conversion_noise_ratio is None else conversion_noise_ratio
        return LinkBudget.from_dbm(
            self.tx_power_dbm_hz,
            self.noise_dbm_hz,
            ratio,
            conversion_efficiency=self.conversion_efficiency,
            bandwidth=self.bandwidth_hz,
        )

    def geometry(self) -> ArrayGeometry:
        return ArrayGeometry(element_count=int(self.element_count), radius=self.radius_m)

    def carrier(self) -> Carrier:
        return Carrier(frequency=self.frequency_hz)


CONFIG_KEYS = tuple(f.name for f in fields(ScenarioConfig))


@dataclass(frozen=True)
class RECurve:
    """One traced region plus the sweep coordinates it belongs to."""

    baseline: str
    param_name: str
    param_value: str
    region: RERegion


@dataclass(frozen=True)
class ScenarioResult:
    config: ScenarioConfig
    curves: tuple[RECurve, ...] = ()
    field_maps: tuple[fm.FieldMap, ...] = ()


def build_evaluator(
    baseline: str,
    geom: ArrayGeometry,
    pose: Pose,
    carrier: Carrier,
    budget: LinkBudget,
) -> REEvaluator:
    """Assemble the rate/harvest evaluator of one baseline at one pose."""
    if baseline == "siso":
        tx_point, rx_point = siso_positions(pose)
        h = los_gain(float(np.linalg.norm(rx_point - tx_point)), carrier)
        return siso_evaluator(h, budget)
    channel = build_channel(
        element_positions(geom, pose, "transmit"),
        element_positions(geom, pose, "receive"),
        carrier,
    )
    if baseline == "oam":
        return oam_evaluator(ModeChannel.from_channel(channel), budget)
    if baseline == "mimo-svd":
        return mimo_svd_evaluator(channel, budget)
    if baseline == "mimo-zf":
        return mimo_zf_evaluator(channel, budget)
    raise ConfigError(f"unknown baseline {baseline!r}", "baselines")


def _trace(config: ScenarioConfig, evaluator: REEvaluator) -> RERegion:
    return trace_monte_carlo(
        evaluator,
        dim=evaluator.dim,
        samples=config.samples,
        seed=config.seed,
        grid_size=config.grid_size,
        workers=config.workers,
    )


def misalignment_cases(config: ScenarioConfig) -> list[tuple[float, float]]:
    """(offset_m, tilt_deg) pairs of the fig5 sweep."""
    if config.sweep_mode == "joint":
        return list(zip(config.offsets_m, config.tilts_deg))
    return [(dx, tilt) for dx in config.offsets_m for tilt in config.tilts_deg]


def _format_value(value: float) -> str:
    return f"{value:g}"


def run_scenario(config: ScenarioConfig) -> ScenarioResult:
    """Execute one named scenario and return its curves and/or field maps."""
    geom = config.geometry()
    carrier = config.carrier()
    curves: list[RECurve] = []

    if config.scenario == "fig2":
        pose = Pose(axial_distance=config.distance_m)
        for ratio in config.conversion_noise_ratios:
            budget = config.budget(ratio)
            for baseline in config.baselines:
                region = _trace(config, build_evaluator(baseline, geom, pose, carrier, budget))
                curves.append(RECurve(baseline, "conversion_noise_ratio", _format_value(ratio), region))
        return ScenarioResult(config=config, curves=tuple(curves))

    if config.scenario == "fig3":
        budget = config.budget()
        for distance in config.distances_m:
            pose = Pose(axial_distance=distance)
            for baseline in config.baselines:
                region = _trace(config, build_evaluator(baseline, geom, pose, carrier, budget))
                curves.append(RECurve(baseline, "distance_m", _format_value(distance), region))
        return ScenarioResult(config=config, curves=tuple(curves))

    if config.scenario == "fig5":
        budget = config.budget()
        for offset, tilt_deg in misalignment_cases(config):
            pose = Pose(
                axial_distance=config.distance_m,
                lateral_offset=offset,
                tilt=math.radians(tilt_deg),
            )
            value = f"dx={_format_value(offset)}m;theta={_format_value(tilt_deg)}deg"
            for baseline in config.baselines:
                region = _trace(config, build_evaluator(baseline, geom, pose, carrier, budget))
                curves.append(RECurve(baseline, "misalignment", value, region))
        return ScenarioResult(config=config, curves=tuple(curves))

    if config.scenario == "field":
        maps = tuple(
            fm.compute_field(
                geom,
                carrier,
                int(mode),
                plane_distance=config.plane_m,
                extent=config.extent_m,
                resolution=config.resolution,
            )
            for mode in config.field_modes
        )
        return ScenarioResult(config=config, field_maps=maps)

    # custom: a single case at the configured pose and noise ratio
    budget = config.budget()
    pose = Pose(
        axial_distance=config.distance_m,
        lateral_offset=config.lateral_offset_m,
        tilt=math.radians(config.tilt_deg),
    )
    value = (
        f"D={_format_value(config.distance_m)}m;dx={_format_value(config.lateral_offset_m)}m;"
        f"theta={_format_value(config.tilt_deg)}deg"
    )
    for baseline in config.baselines:
        region = _trace(config, build_evaluator(baseline, geom, pose, carrier, budget))
        curves.append(RECurve(baseline, "case", value, region))
    return ScenarioResult(config=config, curves=tuple(curves))


def config_from_mapping(scenario: str, values: dict) -> ScenarioConfig:
    """Build a config from a flat mapping, rejecting unknown keys."""
    for key in values:
        if key not in CONFIG_KEYS:
            raise ConfigError("unknown configuration key", key)
        if key == "scenario":
            raise ConfigError("the scenario is chosen on the command line, not in the file", key)
    return ScenarioConfig(scenario=scenario, **values)


def with_overrides(config: ScenarioConfig, **overrides) -> ScenarioConfig:
    """A copy with some fields replaced; validation re-runs."""
    return replace(config, **{k: v for k, v in overrides.items() if v is not None})
