import dataclasses

import numpy as np
import pytest

from oam_swipt import ConfigError, ScenarioConfig, run_scenario
from oam_swipt.scenarios import CONFIG_KEYS, config_from_mapping, misalignment_cases

FAST = dict(samples=1500, grid_size=40, formats=("csv", "json"))


def test_defaults_match_reference_setup():
    config = ScenarioConfig(scenario="fig2")
    assert config.element_count == 8
    assert config.radius_m == 0.1
    assert config.distance_m == 5.0
    assert config.frequency_hz == 28e9
    assert config.tx_power_dbm_hz == 40.0
    assert config.noise_dbm_hz == -20.0
    assert config.conversion_efficiency == 1.0
    assert config.bandwidth_hz == 1.0
    assert config.samples == 100_000
    assert config.conversion_noise_ratios == (0.05, 0.5, 5.0)
    assert config.distances_m == (5.0, 10.0, 15.0)
    assert config.baselines == ("oam", "mimo-zf", "siso")


def test_fig5_defaults_to_oam_and_siso():
    config = ScenarioConfig(scenario="fig5")
    assert config.baselines == ("oam", "siso")
    assert misalignment_cases(config) == [(0.0, 0.0), (0.5, 5.0), (1.0, 10.0)]


def test_product_sweep():
    config = ScenarioConfig(
        scenario="fig5", sweep_mode="product", offsets_m=(0.0, 1.0), tilts_deg=(0.0, 10.0)
    )
    assert misalignment_cases(config) == [(0.0, 0.0), (0.0, 10.0), (1.0, 0.0), (1.0, 10.0)]


def test_unknown_key_rejected():
    with pytest.raises(ConfigError) as err:
        config_from_mapping("fig2", {"radius": 0.1})
    assert err.value.key == "radius"


@pytest.mark.parametrize(
    "overrides, key",
    [
        ({"samples": 0}, "samples"),
        ({"grid_size": 1}, "grid_size"),
        ({"element_count": 0}, "element_count"),
        ({"radius_m": -1.0}, "radius_m"),
        ({"conversion_efficiency": 1.5}, "conversion_efficiency"),
        ({"conversion_efficiency": 0.0}, "conversion_efficiency"),
        ({"tilt_deg": 95.0}, "tilt_deg"),
        ({"baselines": ("oam", "nope")}, "baselines"),
        ({"formats": ("csv", "pdf")}, "formats"),
        ({"sweep_mode": "zigzag"}, "sweep_mode"),
        ({"offsets_m": (0.0, 1.0), "tilts_deg": (0.0,)}, "sweep_mode"),
        ({"field_modes": (0, 9)}, "field_modes"),
        ({"resolution": 1}, "resolution"),
        ({"distances_m": ()}, "distances_m"),
        ({"workers": 0}, "workers"),
    ],
)
def test_config_validation_names_the_key(overrides, key):
    with pytest.raises(ConfigError) as err:
        ScenarioConfig(scenario="fig2", **overrides)
    assert err.value.key == key


def test_scenario_field_names_are_stable():
    # the config file schema is the dataclass; breaking it breaks user files
    assert "conversion_noise_ratio" in CONFIG_KEYS
    assert "out_dir" in CONFIG_KEYS
    assert len(CONFIG_KEYS) == len(dataclasses.fields(ScenarioConfig))


def test_fig2_produces_a_curve_per_ratio_and_baseline():
    result = run_scenario(ScenarioConfig(scenario="fig2", **FAST))
    assert len(result.curves) == 3 * 3
    labels = {(c.baseline, c.param_value) for c in result.curves}
    assert ("oam", "0.05") in labels
    assert ("siso", "5") in labels
    # deterministic ordering: sweep-major, baseline-minor
    assert [c.param_value for c in result.curves[:3]] == ["0.05"] * 3


def test_fig3_sweeps_distances():
    result = run_scenario(ScenarioConfig(scenario="fig3", **FAST))
    assert [c.param_value for c in result.curves[::3]] == ["5", "10", "15"]


def test_fig5_emits_oam_and_siso_per_case():
    result = run_scenario(ScenarioConfig(scenario="fig5", **FAST))
    assert len(result.curves) == 3 * 2
    assert result.curves[0].param_value == "dx=0m;theta=0deg"
    assert {c.baseline for c in result.curves} == {"oam", "siso"}


def test_field_scenario_returns_maps():
    result = run_scenario(ScenarioConfig(scenario="field", resolution=64, formats=("csv",)))
    assert len(result.field_maps) == 5
    assert [m.mode for m in result.field_maps] == [0, 1, 2, 3, 4]
    assert result.field_maps[1].resolution == 64


def test_custom_scenario_runs_all_baselines():
    result = run_scenario(
        ScenarioConfig(scenario="custom", lateral_offset_m=0.3, tilt_deg=4.0, **FAST)
    )
    assert [c.baseline for c in result.curves] == ["oam", "mimo-svd", "mimo-zf", "siso"]


def test_same_seed_same_curves():
    a = run_scenario(ScenarioConfig(scenario="fig2", seed=7, **FAST))
    b = run_scenario(ScenarioConfig(scenario="fig2", seed=7, **FAST))
    for ca, cb in zip(a.curves, b.curves):
        np.testing.assert_array_equal(ca.region.max_rate, cb.region.max_rate)
