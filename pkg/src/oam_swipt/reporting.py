"""Result serialization: CSV and JSON files plus matplotlib SVG figures.

Files are written atomically (temp-and-rename in the target directory) and
contain no timestamps or environment-dependent content, so a rerun with the
same seed reproduces them byte for byte. The embedded config echo is enough
to reproduce the run from scratch.
"""

from __future__ import annotations

import dataclasses
import io
import json
import os
import tempfile
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .errors import OutputError  # noqa: E402
from .field_map import FieldMap  # noqa: E402
from .scenarios import RECurve, ScenarioConfig, ScenarioResult  # noqa: E402

REGION_CSV_HEADER = "baseline,method,param_name,param_value,energy_w_per_hz,max_rate_bps_per_hz"
FIELD_CSV_HEADER = "mode,x_m,y_m,intensity_rel"

_SVG_HASHSALT = "oam-swipt"


def atomic_write_bytes(path: Path, data: bytes) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as handle:
                handle.write(data)
            umask = os.umask(0)
            os.umask(umask)
            os.chmod(tmp, 0o666 & ~umask)  # mkstemp creates 0600; match normal file creation
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        raise OutputError(f"cannot write output ({exc})", path) from exc


def atomic_write_text(path: Path, text: str) -> None:
    atomic_write_bytes(path, text.encode("utf-8"))


def region_csv(curves: tuple[RECurve, ...] | list[RECurve]) -> str:
    lines = [REGION_CSV_HEADER]
    for curve in curves:
        region = curve.region
        for q, rate in zip(region.energy_grid, region.max_rate):
            lines.append(
                f"{curve.baseline},{region.method},{curve.param_name},"
                f"{curve.param_value},{float(q)!r},{float(rate)!r}"
            )
    return "\n".join(lines) + "\n"


def field_csv(maps: tuple[FieldMap, ...] | list[FieldMap]) -> str:
    lines = [FIELD_CSV_HEADER]
    for fmap in maps:
        axis = fmap.axis
        for iy, y in enumerate(axis):
            row = fmap.intensity[iy]
            for x, value in zip(axis, row):
                lines.append(f"{fmap.mode},{float(x)!r},{float(y)!r},{float(value)!r}")
    return "\n".join(lines) + "\n"


def config_to_dict(config: ScenarioConfig) -> dict:
    raw = dataclasses.asdict(config)
    return {k: list(v) if isinstance(v, tuple) else v for k, v in raw.items()}


def result_to_dict(result: ScenarioResult) -> dict:
    """JSON-ready mirror of a scenario result (plain lists and scalars only)."""
    return {
        "scenario": result.config.scenario,
        "seed": result.config.seed,
        "config": config_to_dict(result.config),
        "curves": [
            {
                "baseline": c.baseline,
                "method": c.region.method,
                "param_name": c.param_name,
                "param_value": c.param_value,
                "sample_count": c.region.sample_count,
                "seed": c.region.seed,
                "energy_w_per_hz": [float(q) for q in c.region.energy_grid],
                "max_rate_bps_per_hz": [float(r) for r in c.region.max_rate],
            }
            for c in result.curves
        ],
        "field_maps": [
            {
                "mode": m.mode,
                "plane_distance_m": m.plane_distance,
                "extent_m": m.extent,
                "resolution": m.resolution,
                "intensity_rel": [[float(v) for v in row] for row in m.intensity],
            }
            for m in result.field_maps
        ],
    }


def write_json(payload: dict, path: Path) -> None:
    atomic_write_text(path, json.dumps(payload, indent=1) + "\n")


def load_json(path: Path) -> dict:
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def _figure_bytes(fig) -> bytes:
    buffer = io.BytesIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buffer.getvalue()


def render_regions_svg(curves, title: str) -> bytes:
    """Rate (x) against harvested power (y), one polyline per curve."""
    plt.rcParams["svg.hashsalt"] = _SVG_HASHSALT
    fig, ax = plt.subplots(figsize=(7.5, 5.0))
    baselines = sorted({c.baseline for c in curves})
    colors = {b: f"C{i}" for i, b in enumerate(baselines)}
    styles = ["-", "--", ":", "-.", (0, (5, 1))]
    params = list(dict.fromkeys(c.param_value for c in curves))
    for curve in curves:
        ax.plot(
            curve.region.max_rate,
            curve.region.energy_grid,
            color=colors[curve.baseline],
            linestyle=styles[params.index(curve.param_value) % len(styles)],
            label=f"{curve.baseline} ({curve.param_name}={curve.param_value})",
        )
    ax.set_xlabel("rate (bits/s/Hz)")
    ax.set_ylabel("harvested power (W/Hz)")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return _figure_bytes(fig)


def render_fields_svg(maps) -> bytes:
    """One panel per mode, log-scaled relative intensity."""
    import numpy as np

    plt.rcParams["svg.hashsalt"] = _SVG_HASHSALT
    n = len(maps)
    fig, axes = plt.subplots(1, n, figsize=(3.2 * n, 3.4), squeeze=False)
    for ax, fmap in zip(axes[0], maps):
        span = [-fmap.extent, fmap.extent, -fmap.extent, fmap.extent]
        shown = np.maximum(fmap.intensity, 1e-12)
        image = ax.imshow(
            10.0 * np.log10(shown), origin="lower", extent=span, cmap="inferno",
            vmin=-40.0, vmax=0.0,
        )
        ax.set_title(f"mode {fmap.mode}")
        ax.set_xlabel("x (m)")
        ax.set_ylabel("y (m)")
        fig.colorbar(image, ax=ax, shrink=0.8, label="dB rel. mode-0 axis")
    fig.tight_layout()
    return _figure_bytes(fig)


def emit_results(result: ScenarioResult, out_dir: Path) -> dict[str, Path]:
    """Write the result in every configured format; returns {format: path}."""
    out_dir = Path(out_dir)
    name = result.config.scenario
    written: dict[str, Path] = {}
    formats = result.config.formats
    if "csv" in formats:
        path = out_dir / f"{name}.csv"
        if result.curves:
            atomic_write_text(path, region_csv(result.curves))
        else:
            atomic_write_text(path, field_csv(result.field_maps))
        written["csv"] = path
    if "json" in formats:
        path = out_dir / f"{name}.json"
        write_json(result_to_dict(result), path)
        written["json"] = path
    if "svg" in formats:
        path = out_dir / f"{name}.svg"
        if result.curves:
            data = render_regions_svg(result.curves, f"rate-energy regions ({name})")
        else:
            data = render_fields_svg(result.field_maps)
        atomic_write_bytes(path, data)
        written["svg"] = path
    return written
