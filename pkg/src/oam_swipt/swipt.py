"""Dynamic-power-splitting SWIPT receiver models for OAM, MIMO, and SISO links.

Every stream l of a receiver splits its RF signal: a fraction rho_l feeds the
information decoder (which then adds conversion noise), the remaining
1 - rho_l feeds the energy harvester (which collects raw RF power, noise
included). Rates are Shannon rates per Hz; powers are spectral densities in
W/Hz. All math is linear; dBm/Hz appears only at the configuration boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelMatrix
from .errors import IllConditionedChannelError, InvalidInputError

# Zero-forcing on a nearly singular matrix squares the condition number when
# forming (H^H H)^-1; beyond this bound the noise-amplification diagonal is
# numerically meaningless in double precision.
_ZF_MAX_CONDITION = 1e8


def dbm_per_hz_to_watts(dbm: float) -> float:
    """x dBm/Hz -> 10**((x - 30)/10) W/Hz."""
    return 10.0 ** ((dbm - 30.0) / 10.0)


def watts_to_dbm_per_hz(watts: float) -> float:
    if watts <= 0:
        raise InvalidInputError(f"power must be positive to express in dBm, got {watts!r}")
    return 10.0 * math.log10(watts) + 30.0


def dft_matrix(n: int) -> np.ndarray:
    """Unitary DFT matrix with entries exp(+j*2*pi*m*l/n)/sqrt(n)."""
    m = np.arange(n)
    return np.exp(2j * np.pi * np.outer(m, m) / n) / np.sqrt(n)


@dataclass(frozen=True)
class LinkBudget:
    """Powers and noise levels of one link, all in W/Hz.

    per_stream_power defaults to the equal split total/N; an explicit vector
    must be nonnegative and sum to the total within 1e-12 relative.
    """

    total_tx_power: float
    channel_noise: float
    conversion_noise: float
    conversion_efficiency: float = 1.0
    bandwidth: float = 1.0
    per_stream_power: tuple[float, ...] | None = None

    def __post_init__(self):
        if not (math.isfinite(self.total_tx_power) and self.total_tx_power > 0):
            raise InvalidInputError(f"total_tx_power must be > 0, got {self.total_tx_power!r}")
        if not (math.isfinite(self.channel_noise) and self.channel_noise > 0):
            raise InvalidInputError(f"channel_noise must be > 0, got {self.channel_noise!r}")
        if not (math.isfinite(self.conversion_noise) and self.conversion_noise >= 0):
            raise InvalidInputError(f"conversion_noise must be >= 0, got {self.conversion_noise!r}")
        if not 0 < self.conversion_efficiency <= 1:
            raise InvalidInputError(
                f"conversion_efficiency must lie in (0, 1], got {self.conversion_efficiency!r}"
            )
        if not (math.isfinite(self.bandwidth) and self.bandwidth > 0):
            raise InvalidInputError(f"bandwidth must be > 0, got {self.bandwidth!r}")
        if self.per_stream_power is not None:
            p = tuple(float(x) for x in self.per_stream_power)
            if any(x < 0 for x in p):
                raise InvalidInputError("per_stream_power entries must be >= 0")
            total = sum(p)
            if abs(total - self.total_tx_power) > 1e-12 * self.total_tx_power:
                raise InvalidInputError(
                    f"per_stream_power sums to {total!r}, expected {self.total_tx_power!r}"
                )
            object.__setattr__(self, "per_stream_power", p)

    @classmethod
    def from_dbm(
        cls,
        tx_power_dbm_hz: float,
        noise_dbm_hz: float,
        conversion_noise_ratio: float,
        conversion_efficiency: float = 1.0,
        bandwidth: float = 1.0,
    ) -> "LinkBudget":
        """Build from the dBm/Hz figures used by the numerical scenarios."""
        noise = dbm_per_hz_to_watts(noise_dbm_hz)
        return cls(
            total_tx_power=dbm_per_hz_to_watts(tx_power_dbm_hz),
            channel_noise=noise,
            conversion_noise=conversion_noise_ratio * noise,
            conversion_efficiency=conversion_efficiency,
            bandwidth=bandwidth,
        )

    def stream_powers(self, n: int) -> np.ndarray:
        if self.per_stream_power is not None:
            if len(self.per_stream_power) != n:
                raise InvalidInputError(
                    f"per_stream_power has {len(self.per_stream_power)} entries, expected {n}"
                )
            return np.array(self.per_stream_power)
        return np.full(n, self.total_tx_power / n)


@dataclass(frozen=True)
class SplitVector:
    """Per-stream ID/EH power split ratios, each in [0, 1]."""

    ratios: tuple[float, ...]

    def __post_init__(self):
        r = tuple(float(x) for x in np.atleast_1d(np.asarray(self.ratios, dtype=float)))
        if any(not (0.0 <= x <= 1.0) for x in r):
            raise InvalidInputError(f"split ratios must lie in [0, 1], got {self.ratios!r}")
        object.__setattr__(self, "ratios", r)

    def __len__(self) -> int:
        return len(self.ratios)

    @classmethod
    def all_zeros(cls, n: int) -> "SplitVector":
        return cls((0.0,) * n)

    @classmethod
    def all_ones(cls, n: int) -> "SplitVector":
        return cls((1.0,) * n)

    @classmethod
    def uniform(cls, n: int, value: float) -> "SplitVector":
        return cls((value,) * n)


@dataclass(frozen=True)
class REPoint:
    """One achievable (rate, harvested power) pair: bits/s/Hz and W/Hz."""

    rate: float
    harvested: float


@dataclass(frozen=True)
class ModeChannel:
    """Mode-domain effective channel G = F_rx^H @ H @ F_tx for unitary DFT matrices."""

    effective_gains: np.ndarray
    kind: str = "oam"

    def __post_init__(self):
        g = np.asarray(self.effective_gains, dtype=complex)
        if g.ndim != 2 or g.size == 0 or not np.all(np.isfinite(g)):
            raise InvalidInputError("effective_gains must be a finite nonempty 2-D matrix")
        g.setflags(write=False)
        object.__setattr__(self, "effective_gains", g)

    @classmethod
    def from_channel(cls, channel: ChannelMatrix | np.ndarray, kind: str = "oam") -> "ModeChannel":
        h = channel.entries if isinstance(channel, ChannelMatrix) else np.asarray(channel)
        f_rx = dft_matrix(h.shape[0])
        f_tx = dft_matrix(h.shape[1])
        return cls(effective_gains=f_rx.conj().T @ h @ f_tx, kind=kind)

    @property
    def n_modes(self) -> int:
        return self.effective_gains.shape[0]

    def diagonality(self) -> float:
        """Largest off-diagonal magnitude relative to the largest diagonal one."""
        g = np.abs(self.effective_gains)
        off = g - np.diag(np.diag(g))
        return float(np.max(off) / np.max(np.diag(g)))


@dataclass(frozen=True)
class REEvaluator:
    """Vectorized rate/harvest evaluation over batches of split vectors.

    Holds the per-stream constants of one transceiver so that a (M, dim)
    matrix of split vectors maps to M rate-energy points in a handful of
    array operations. When dim == 1 but several streams exist (zero-forcing),
    the single ratio is shared by every stream.
    """

    kind: str
    dim: int
    signal: np.ndarray        # useful power per decoded stream, p_l * |gain|^2
    interference: np.ndarray  # co-stream leakage power entering each decoder
    harvest_power: np.ndarray  # received RF power per harvesting stream
    channel_noise: float
    conversion_noise: float
    efficiency: float

    def __call__(self, rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        rho = np.atleast_2d(np.asarray(rho, dtype=float))
        if rho.shape[1] != self.dim:
            raise InvalidInputError(f"expected split vectors of length {self.dim}, got {rho.shape[1]}")
        rho_rate = rho if self.dim == len(self.signal) else np.broadcast_to(rho, (rho.shape[0], len(self.signal)))
        denominator = rho_rate * (self.interference + self.channel_noise) + self.conversion_noise
        # denominator can only vanish at rho = 0 with zero conversion noise,
        # where there is no decoder input and the rate is 0
        sinr = np.divide(
            rho_rate * self.signal,
            denominator,
            out=np.zeros_like(denominator),
            where=denominator > 0.0,
        )
        rates = np.sum(np.log2(1.0 + sinr), axis=1)
        rho_harv = rho if self.dim == len(self.harvest_power) else np.broadcast_to(rho, (rho.shape[0], len(self.harvest_power)))
        harvested = self.efficiency * np.sum(
            (1.0 - rho_harv) * (self.harvest_power + self.channel_noise), axis=1
        )
        return rates, harvested

    def point(self, rho) -> REPoint:
        rates, harvested = self(np.asarray(rho, dtype=float).reshape(1, -1))
        return REPoint(rate=float(rates[0]), harvested=float(harvested[0]))


def oam_evaluator(mode_channel: ModeChannel, budget: LinkBudget) -> REEvaluator:
    """Per-mode DPS receiver; inter-mode leakage enters each SINR as interference."""
    g = mode_channel.effective_gains
    if g.shape[0] != g.shape[1]:
        raise InvalidInputError(f"mode channel must be square, got shape {g.shape}")
    n = g.shape[0]
    p = budget.stream_powers(n)
    power = np.abs(g) ** 2 * p[None, :]   # power landing on rx mode l from tx mode k
    totals = power.sum(axis=1)
    signal = np.diag(power).copy()
    return REEvaluator(
        kind="oam",
        dim=n,
        signal=signal,
        interference=totals - signal,
        harvest_power=totals,
        channel_noise=budget.channel_noise,
        conversion_noise=budget.conversion_noise,
        efficiency=budget.conversion_efficiency,
    )


def siso_evaluator(h: complex, budget: LinkBudget) -> REEvaluator:
    """Single stream carrying the full transmit power."""
    received = budget.total_tx_power * abs(h) ** 2
    one = np.array([received])
    return REEvaluator(
        kind="siso",
        dim=1,
        signal=one,
        interference=np.zeros(1),
        harvest_power=one,
        channel_noise=budget.channel_noise,
        conversion_noise=budget.conversion_noise,
        efficiency=budget.conversion_efficiency,
    )


def mimo_svd_evaluator(channel: ChannelMatrix | np.ndarray, budget: LinkBudget) -> REEvaluator:
    """Eigenmode streams from the SVD, equal power, per-stream DPS."""
    h = channel.entries if isinstance(channel, ChannelMatrix) else np.asarray(channel)
    s = np.linalg.svd(h, compute_uv=False)
    p = budget.stream_powers(len(s))
    sub = p * s**2
    return REEvaluator(
        kind="mimo-svd",
        dim=len(s),
        signal=sub,
        interference=np.zeros(len(s)),
        harvest_power=sub,
        channel_noise=budget.channel_noise,
        conversion_noise=budget.conversion_noise,
        efficiency=budget.conversion_efficiency,
    )


def mimo_zf_evaluator(channel: ChannelMatrix | np.ndarray, budget: LinkBudget) -> REEvaluator:
    """Open-loop per-antenna streams, zero-forcing receive, one common split.

    The ZF equalizer amplifies both channel and conversion noise on stream k
    by beta_k = [(H^H H)^-1]_kk; the harvester taps the raw per-antenna RF
    power before equalization.
    """
    h = channel.entries if isinstance(channel, ChannelMatrix) else np.asarray(channel)
    if h.shape[0] != h.shape[1]:
        raise InvalidInputError(f"zero-forcing needs a square channel, got shape {h.shape}")
    cond = float(np.linalg.cond(h))
    if not math.isfinite(cond) or cond > _ZF_MAX_CONDITION:
        raise IllConditionedChannelError("channel is singular for zero-forcing", cond)
    n = h.shape[0]
    p = budget.stream_powers(n)
    beta = np.real(np.diag(np.linalg.inv(h.conj().T @ h)))
    return REEvaluator(
        kind="mimo-zf",
        dim=1,
        signal=p / beta,
        interference=np.zeros(n),
        harvest_power=np.sum(np.abs(h) ** 2 * p[None, :], axis=1),
        channel_noise=budget.channel_noise,
        conversion_noise=budget.conversion_noise,
        efficiency=budget.conversion_efficiency,
    )


def oam_rate_energy(mode_channel: ModeChannel, budget: LinkBudget, rho: SplitVector) -> REPoint:
    evaluator = oam_evaluator(mode_channel, budget)
    if len(rho) != evaluator.dim:
        raise InvalidInputError(f"split vector has {len(rho)} entries, expected {evaluator.dim}")
    return evaluator.point(rho.ratios)


def siso_rate_energy(h: complex, budget: LinkBudget, rho: float) -> REPoint:
    if not 0.0 <= rho <= 1.0:
        raise InvalidInputError(f"rho must lie in [0, 1], got {rho!r}")
    return siso_evaluator(h, budget).point([rho])


def mimo_svd_rate_energy(
    channel: ChannelMatrix | np.ndarray, budget: LinkBudget, rho: SplitVector
) -> REPoint:
    evaluator = mimo_svd_evaluator(channel, budget)
    if len(rho) != evaluator.dim:
        raise InvalidInputError(f"split vector has {len(rho)} entries, expected {evaluator.dim}")
    return evaluator.point(rho.ratios)


def mimo_zf_rate_energy(channel: ChannelMatrix | np.ndarray, budget: LinkBudget, rho: float) -> REPoint:
    if not 0.0 <= rho <= 1.0:
        raise InvalidInputError(f"rho must lie in [0, 1], got {rho!r}")
    return mimo_zf_evaluator(channel, budget).point([rho])
