"""Command-line experiment runner.

    oam-swipt run <scenario> [--config FILE] [--out DIR] [--seed N]
                  [--samples N] [--format csv,json,svg] [...]

Scenario parameters come from built-in defaults, overlaid by an optional flat
key=value config file, overlaid by command-line flags (flags win). Exit
codes: 0 success, 2 configuration error, 3 model/runtime error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConfigError, InvalidInputError, OutputError, SimulationError
from .reporting import emit_results
from .scenarios import (
    CONFIG_KEYS,
    SCENARIOS,
    ScenarioConfig,
    config_from_mapping,
    run_scenario,
)

_INT_KEYS = {"element_count", "samples", "seed", "grid_size", "workers", "resolution"}
_FLOAT_LIST_KEYS = {"conversion_noise_ratios", "distances_m", "offsets_m", "tilts_deg"}
_INT_LIST_KEYS = {"field_modes"}
_STR_LIST_KEYS = {"baselines", "formats"}
_STR_KEYS = {"sweep_mode", "out_dir"}


def _convert(key: str, raw: str):
    try:
        if key in _INT_KEYS:
            return int(raw)
        if key in _FLOAT_LIST_KEYS:
            return tuple(float(x) for x in raw.split(",") if x.strip())
        if key in _INT_LIST_KEYS:
            return tuple(int(x) for x in raw.split(",") if x.strip())
        if key in _STR_LIST_KEYS:
            return tuple(x.strip() for x in raw.split(",") if x.strip())
        if key in _STR_KEYS:
            return raw.strip()
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"cannot parse value {raw!r} ({exc})", key) from exc


def parse_config_file(path: Path) -> dict:
    """Flat `key = value` lines; '#' starts a comment; unknown keys rejected."""
    values: dict = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path} ({exc})", "config") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}", "config")
        key, raw = (part.strip() for part in stripped.split("=", 1))
        if key not in CONFIG_KEYS or key == "scenario":
            raise ConfigError(f"line {lineno}: unknown configuration key", key)
        values[key] = _convert(key, raw)
    return values


def _add_run_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("scenario", choices=SCENARIOS)
    parser.add_argument("--config", type=Path, help="flat key=value config file")
    parser.add_argument("--out", dest="out_dir", help="output directory (default: results)")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--samples", type=int, help="Monte Carlo sample count")
    parser.add_argument("--format", dest="formats", help="comma list from csv,json,svg")
    parser.add_argument("--baselines", help="comma list from oam,mimo-svd,mimo-zf,siso")
    parser.add_argument("--grid-size", dest="grid_size", type=int)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--element-count", dest="element_count", type=int)
    parser.add_argument("--radius", dest="radius_m", type=float, help="UCA radius, m")
    parser.add_argument("--distance", dest="distance_m", type=float, help="array separation, m")
    parser.add_argument("--frequency", dest="frequency_hz", type=float, help="carrier, Hz")
    parser.add_argument("--tx-power-dbm-hz", dest="tx_power_dbm_hz", type=float)
    parser.add_argument("--noise-dbm-hz", dest="noise_dbm_hz", type=float)
    parser.add_argument("--conversion-noise-ratio", dest="conversion_noise_ratio", type=float)
    parser.add_argument("--conversion-efficiency", dest="conversion_efficiency", type=float)
    parser.add_argument("--bandwidth-hz", dest="bandwidth_hz", type=float)
    parser.add_argument("--dx", dest="lateral_offset_m", type=float, help="lateral offset, m")
    parser.add_argument("--theta-deg", dest="tilt_deg", type=float, help="tilt, degrees")
    parser.add_argument("--conversion-noise-ratios", dest="conversion_noise_ratios",
                        help="fig2 sweep, comma list")
    parser.add_argument("--distances", dest="distances_m", help="fig3 sweep, comma list of m")
    parser.add_argument("--dx-values", dest="offsets_m", help="fig5 sweep, comma list of m")
    parser.add_argument("--theta-deg-values", dest="tilts_deg", help="fig5 sweep, comma list of deg")
    parser.add_argument("--sweep-mode", dest="sweep_mode", choices=("joint", "product"))
    parser.add_argument("--modes", dest="field_modes", help="field scenario modes, comma list")
    parser.add_argument("--plane", dest="plane_m", type=float, help="field plane distance, m")
    parser.add_argument("--extent", dest="extent_m", type=float, help="field half-width, m")
    parser.add_argument("--resolution", type=int, help="field grid points per side")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oam-swipt", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    _add_run_arguments(sub.add_parser("run", help="execute a named scenario"))
    return parser


_COMMA_FLAGS = frozenset(
    {"formats", "baselines", "conversion_noise_ratios", "distances_m",
     "offsets_m", "tilts_deg", "field_modes"}
)


def resolve_config(args: argparse.Namespace) -> ScenarioConfig:
    values = parse_config_file(args.config) if args.config else {}
    for key in CONFIG_KEYS:
        if key == "scenario" or not hasattr(args, key):
            continue
        flag = getattr(args, key)
        if flag is None:
            continue
        values[key] = _convert(key, flag) if key in _COMMA_FLAGS else flag
    return config_from_mapping(args.scenario, values)


def _summarize(result, written: dict) -> str:
    lines = [f"scenario {result.config.scenario}: seed={result.config.seed}"]
    for curve in result.curves:
        lines.append(
            f"  {curve.baseline:9s} {curve.param_name}={curve.param_value}: "
            f"max rate {curve.region.max_rate[0]:.6g} bits/s/Hz, "
            f"Q_max {curve.region.q_max:.6g} W/Hz"
        )
    for fmap in result.field_maps:
        lines.append(
            f"  mode {fmap.mode}: peak {fmap.intensity.max():.4g} (rel), "
            f"{fmap.resolution}x{fmap.resolution} at z={fmap.plane_distance:g} m"
        )
    for fmt, path in written.items():
        lines.append(f"  wrote {fmt}: {path}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = resolve_config(args)
    except (ConfigError, InvalidInputError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    try:
        result = run_scenario(config)
        written = emit_results(result, Path(config.out_dir))
    except (OutputError, OSError) as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return 4
    except SimulationError as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return 3
    print(_summarize(result, written))
    return 0


if __name__ == "__main__":
    sys.exit(main())
