import numpy as np
import pytest

from oam_swipt import (
    Carrier,
    ChannelMatrix,
    DegenerateGeometryError,
    InvalidInputError,
    Pose,
    SPEED_OF_LIGHT,
    StructureViolationError,
    build_channel,
    circulant_mismatch,
    circulant_mode_gains,
    element_positions,
    los_gain,
)
from oam_swipt.swipt import dft_matrix


def test_wavelength_at_28_ghz(carrier):
    # independent oracle: c / f
    assert carrier.wavelength == pytest.approx(SPEED_OF_LIGHT / 28e9, rel=1e-15)
    assert carrier.wavelength == pytest.approx(1.07069e-2, rel=1e-5)
    assert abs(carrier.wavelength * carrier.frequency - SPEED_OF_LIGHT) / SPEED_OF_LIGHT < 1e-15


def test_gain_at_one_wavelength(carrier):
    lam = carrier.wavelength
    gain = los_gain(lam, carrier)
    assert abs(gain) == pytest.approx(1.0 / (4.0 * np.pi), rel=1e-12)
    # exponent is exactly -j*2*pi: phase wraps back to zero
    assert np.angle(gain) == pytest.approx(0.0, abs=1e-9)


def test_gain_magnitude_at_five_meters(carrier):
    # direct arithmetic oracle for the default link distance
    expected = (SPEED_OF_LIGHT / 28e9 / (4.0 * np.pi * 5.0)) ** 2
    assert abs(los_gain(5.0, carrier)) ** 2 == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(2.90e-8, rel=5e-3)


def test_gain_magnitude_decreases_with_distance(carrier):
    distances = np.linspace(0.5, 50.0, 40)
    mags = np.abs(los_gain(distances, carrier))
    assert np.all(np.diff(mags) < 0)


@pytest.mark.parametrize("bad", [0.0, -1.0, np.nan, np.inf])
def test_gain_rejects_bad_distance(carrier, bad):
    with pytest.raises(InvalidInputError):
        los_gain(bad, carrier)


def test_carrier_rejects_nonpositive_frequency():
    with pytest.raises(InvalidInputError):
        Carrier(frequency=0.0)


def test_single_pair_channel(carrier):
    h = build_channel(np.zeros((1, 3)), np.array([[0.0, 0.0, 5.0]]), carrier)
    assert h.entries.shape == (1, 1)
    assert h.entries[0, 0] == pytest.approx(los_gain(5.0, carrier))


def test_coincident_points_rejected(carrier):
    with pytest.raises(DegenerateGeometryError):
        build_channel(np.zeros((1, 3)), np.zeros((1, 3)), carrier)


def test_aligned_channel_is_circulant(aligned_channel):
    assert circulant_mismatch(aligned_channel.entries) < 1e-12


def test_misaligned_channel_is_not_circulant(misaligned_channel):
    assert circulant_mismatch(misaligned_channel.entries) > 1e-3
    with pytest.raises(StructureViolationError):
        circulant_mode_gains(misaligned_channel)


def test_identity_mode_gains(carrier):
    h = ChannelMatrix(entries=np.eye(4, dtype=complex), wavelength=carrier.wavelength)
    np.testing.assert_allclose(circulant_mode_gains(h), np.ones(4), atol=1e-14)


def test_mode_gains_match_dft_diagonalization(aligned_channel):
    # the eigenvalues must equal the diagonal of F^H H F used downstream
    gains = circulant_mode_gains(aligned_channel)
    n = aligned_channel.n_rx
    f = dft_matrix(n)
    diag = np.diag(f.conj().T @ aligned_channel.entries @ f)
    np.testing.assert_allclose(gains, diag, rtol=1e-12, atol=1e-18)


def test_paired_mode_orders_have_equal_magnitude(aligned_channel):
    gains = np.abs(circulant_mode_gains(aligned_channel))
    n = len(gains)
    for mode in range(1, n):
        assert gains[mode] == pytest.approx(gains[(n - mode) % n], rel=1e-12)


def test_sorted_mode_gains_match_singular_values(aligned_channel):
    # independent oracle: SVD of the raw matrix
    gains = np.sort(np.abs(circulant_mode_gains(aligned_channel)))[::-1]
    singular = np.linalg.svd(aligned_channel.entries, compute_uv=False)
    np.testing.assert_allclose(gains, singular, rtol=1e-9)


def test_mode_gain_decay_with_mode_order(aligned_channel):
    gains = np.abs(circulant_mode_gains(aligned_channel))
    n = len(gains)
    orders = np.minimum(np.arange(n), n - np.arange(n))
    by_order = [gains[orders == k].mean() for k in range(n // 2 + 1)]
    assert all(a >= b for a, b in zip(by_order, by_order[1:]))


def test_mode_gain_decay_holds_across_distances(geom, carrier):
    for distance in (5.0, 10.0, 15.0):
        pose = Pose(axial_distance=distance)
        h = build_channel(
            element_positions(geom, pose, "transmit"),
            element_positions(geom, pose, "receive"),
            carrier,
        )
        gains = np.abs(circulant_mode_gains(h))
        n = len(gains)
        orders = np.minimum(np.arange(n), n - np.arange(n))
        for k in range(1, n // 2 + 1):
            assert gains[orders == k].mean() <= gains[orders == k - 1].mean()


def test_channel_matrix_rejects_nonfinite(carrier):
    bad = np.eye(2, dtype=complex)
    bad[0, 0] = np.nan
    with pytest.raises(InvalidInputError):
        ChannelMatrix(entries=bad, wavelength=carrier.wavelength)


def test_mode_gains_require_square_matrix(carrier):
    rect = ChannelMatrix(entries=np.ones((2, 3), dtype=complex), wavelength=carrier.wavelength)
    with pytest.raises(StructureViolationError):
        circulant_mode_gains(rect)
