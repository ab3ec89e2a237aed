"""Shared fixtures: the default link every scenario is built around."""

import numpy as np
import pytest

from oam_swipt import (
    ArrayGeometry,
    Carrier,
    LinkBudget,
    ModeChannel,
    Pose,
    build_channel,
    element_positions,
)

N_ELEMENTS = 8
RADIUS_M = 0.1
DISTANCE_M = 5.0
FREQUENCY_HZ = 28e9
NOISE_W = 1e-5           # -20 dBm/Hz
TX_POWER_W = 10.0        # 40 dBm/Hz


@pytest.fixture(scope="session")
def geom():
    return ArrayGeometry(element_count=N_ELEMENTS, radius=RADIUS_M)


@pytest.fixture(scope="session")
def carrier():
    return Carrier(frequency=FREQUENCY_HZ)


@pytest.fixture(scope="session")
def aligned_pose():
    return Pose(axial_distance=DISTANCE_M)


@pytest.fixture(scope="session")
def misaligned_pose():
    return Pose(axial_distance=DISTANCE_M, lateral_offset=1.0, tilt=np.deg2rad(10.0))


@pytest.fixture(scope="session")
def budget():
    return LinkBudget.from_dbm(40.0, -20.0, 0.05)


def make_channel(geom, carrier, pose):
    return build_channel(
        element_positions(geom, pose, "transmit"),
        element_positions(geom, pose, "receive"),
        carrier,
    )


@pytest.fixture(scope="session")
def aligned_channel(geom, carrier, aligned_pose):
    return make_channel(geom, carrier, aligned_pose)


@pytest.fixture(scope="session")
def misaligned_channel(geom, carrier, misaligned_pose):
    return make_channel(geom, carrier, misaligned_pose)


@pytest.fixture(scope="session")
def aligned_modes(aligned_channel):
    return ModeChannel.from_channel(aligned_channel)


@pytest.fixture(scope="session")
def misaligned_modes(misaligned_channel):
    return ModeChannel.from_channel(misaligned_channel)
