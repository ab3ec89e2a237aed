"""Rate-energy region simulator for OAM-based SWIPT over LOS UCA links."""

from .channel import (
    SPEED_OF_LIGHT,
    Carrier,
    ChannelMatrix,
    build_channel,
    circulant_mismatch,
    circulant_mode_gains,
    los_gain,
)
from .errors import (
    ConfigError,
    DegenerateGeometryError,
    IllConditionedChannelError,
    InvalidInputError,
    OutputError,
    SimulationError,
    StructureViolationError,
    UnsupportedModelError,
)
from .field_map import (
    FieldMap,
    azimuthal_profile,
    captured_power,
    compute_field,
    point_intensity,
    ring_radius,
)
from .geometry import ArrayGeometry, Pose, element_positions, siso_positions
from .re_region import (
    RERegion,
    lagrangian_points,
    pareto_envelope,
    sample_split_ratios,
    stream_evaluators,
    trace_lagrangian,
    trace_monte_carlo,
)
from .scenarios import (
    BASELINES,
    SCENARIOS,
    RECurve,
    ScenarioConfig,
    ScenarioResult,
    build_evaluator,
    run_scenario,
)
from .swipt import (
    LinkBudget,
    ModeChannel,
    REEvaluator,
    REPoint,
    SplitVector,
    dbm_per_hz_to_watts,
    dft_matrix,
    mimo_svd_rate_energy,
    mimo_zf_rate_energy,
    oam_rate_energy,
    siso_rate_energy,
    watts_to_dbm_per_hz,
)

__version__ = "0.1.0"

__all__ = [
    "ArrayGeometry",
    "BASELINES",
    "Carrier",
    "ChannelMatrix",
    "ConfigError",
    "DegenerateGeometryError",
    "FieldMap",
    "IllConditionedChannelError",
    "InvalidInputError",
    "LinkBudget",
    "ModeChannel",
    "OutputError",
    "Pose",
    "RECurve",
    "REEvaluator",
    "REPoint",
    "RERegion",
    "SCENARIOS",
    "ScenarioConfig",
    "ScenarioResult",
    "SimulationError",
    "SplitVector",
    "SPEED_OF_LIGHT",
    "StructureViolationError",
    "UnsupportedModelError",
    "azimuthal_profile",
    "build_channel",
    "build_evaluator",
    "captured_power",
    "circulant_mismatch",
    "circulant_mode_gains",
    "compute_field",
    "dbm_per_hz_to_watts",
    "dft_matrix",
    "element_positions",
    "lagrangian_points",
    "los_gain",
    "mimo_svd_rate_energy",
    "mimo_zf_rate_energy",
    "oam_rate_energy",
    "pareto_envelope",
    "point_intensity",
    "ring_radius",
    "run_scenario",
    "sample_split_ratios",
    "siso_positions",
    "siso_rate_energy",
    "stream_evaluators",
    "trace_lagrangian",
    "trace_monte_carlo",
    "watts_to_dbm_per_hz",
]
