"""Free-space LOS channel matrices and circulant eigen-analysis.

Each element pair contributes a Friis amplitude lambda/(4*pi*d) with a
spherical-wave phase exp(-j*2*pi*d/lambda). Aligned UCA-to-UCA links produce
circulant matrices, diagonalized by the DFT into per-mode sub-channels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGeometryError, InvalidInputError, StructureViolationError

SPEED_OF_LIGHT = 299_792_458.0  # m/s


@dataclass(frozen=True)
class Carrier:
    """RF carrier; wavelength follows from c = lambda * f."""

    frequency: float

    def __post_init__(self):
        if not (math.isfinite(self.frequency) and self.frequency > 0):
            raise InvalidInputError(f"frequency must be positive, got {self.frequency!r}")

    @property
    def wavelength(self) -> float:
        return SPEED_OF_LIGHT / self.frequency


@dataclass(frozen=True)
class ChannelMatrix:
    """Complex amplitude gains between all element pairs, shape (N_rx, N_tx)."""

    entries: np.ndarray
    wavelength: float

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.size == 0:
            raise InvalidInputError("entries must be a nonempty 2-D matrix")
        if not np.all(np.isfinite(entries)):
            raise InvalidInputError("entries must be finite")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def n_rx(self) -> int:
        return self.entries.shape[0]

    @property
    def n_tx(self) -> int:
        return self.entries.shape[1]


def los_gain(distance, carrier: Carrier):
    """Complex LOS amplitude gain (lambda/(4*pi*d)) * exp(-j*2*pi*d/lambda).

    Accepts a scalar or an array of distances; distances must be > 0.
    """
    d = np.asarray(distance, dtype=float)
    if not np.all(np.isfinite(d)) or np.any(d <= 0):
        raise InvalidInputError(f"distance must be positive and finite, got {distance!r}")
    lam = carrier.wavelength
    gain = lam / (4.0 * np.pi * d) * np.exp(-2j * np.pi * d / lam)
    return complex(gain) if np.isscalar(distance) else gain


def build_channel(tx_positions, rx_positions, carrier: Carrier) -> ChannelMatrix:
    """LOS channel between element sets: entry (n, m) = los_gain(||rx_n - tx_m||)."""
    tx = np.atleast_2d(np.asarray(tx_positions, dtype=float))
    rx = np.atleast_2d(np.asarray(rx_positions, dtype=float))
    if tx.shape[-1] != 3 or rx.shape[-1] != 3 or tx.size == 0 or rx.size == 0:
        raise InvalidInputError("positions must be nonempty sequences of 3-D points")
    distances = np.linalg.norm(rx[:, None, :] - tx[None, :, :], axis=2)
    if np.any(distances == 0):
        n, m = np.argwhere(distances == 0)[0]
        raise DegenerateGeometryError(
            f"receive element {n} coincides with transmit element {m}"
        )
    return ChannelMatrix(entries=los_gain(distances, carrier), wavelength=carrier.wavelength)


def circulant_mismatch(entries: np.ndarray) -> float:
    """Worst relative deviation of any row from the cyclic shift of row 0."""
    h = np.asarray(entries)
    n = h.shape[0]
    scale = np.max(np.abs(h))
    worst = 0.0
    for row in range(1, n):
        # circulant with H[n, m] = c[(m - n) mod N] means row n is row 0 rolled right by n
        worst = max(worst, np.max(np.abs(h[row] - np.roll(h[0], row))))
    return worst / scale


def circulant_mode_gains(channel: ChannelMatrix, tol: float = 1e-9) -> np.ndarray:
    """Per-mode complex gains of a circulant channel, ordered by mode index.

    Returns the eigenvalues h_l = sum_k H[0, k] * exp(+j*2*pi*k*l/N), which
    equal the diagonal of F^H H F for the unitary DFT matrix used by the
    mode-domain transform.

    Raises StructureViolationError when the matrix is not square-circulant
    within ``tol`` (relative).
    """
    h = channel.entries if isinstance(channel, ChannelMatrix) else np.asarray(channel)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise StructureViolationError(f"expected a square matrix, got shape {h.shape}")
    mismatch = circulant_mismatch(h)
    if mismatch > tol:
        raise StructureViolationError(
            f"matrix is not circulant: relative shift mismatch {mismatch:.3e} > {tol:.1e}"
        )
    n = h.shape[0]
    return np.fft.ifft(h[0]) * n
