"""Rate-energy region tracing.

Two routes to the Pareto boundary:

* ``trace_monte_carlo`` draws uniform random split vectors (plus the exact
  all-zeros / all-ones corners) and takes the staircase upper envelope over a
  uniform harvested-power grid. This is the method the simulator reports.
* ``trace_lagrangian`` scalarizes the separable (interference-free) stream
  model with a grid of multipliers mu and intersects the supporting
  half-planes rate <= D(mu) - mu*q. Because every achievable point obeys each
  half-plane (weak duality), this envelope upper-bounds the Monte Carlo one
  at every threshold; it is the independent oracle the tests lean on.

Sampling is chunked, with one spawned child seed per chunk in a fixed order,
so results are bit-identical no matter how many workers evaluate the chunks.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import InvalidInputError, UnsupportedModelError
from .swipt import LinkBudget, ModeChannel, REPoint

SAMPLE_CHUNK = 16384
DEFAULT_GRID_SIZE = 200
DEFAULT_RHO_GRID = 1024
DEFAULT_MU_COUNT = 64


@dataclass(frozen=True)
class RERegion:
    """Upper envelope of achievable rate over a harvested-power grid."""

    energy_grid: np.ndarray   # thresholds, W/Hz, uniform on [0, Q_max]
    max_rate: np.ndarray      # best rate with harvested >= threshold, bits/s/Hz
    method: str               # "monte-carlo" | "lagrangian"
    sample_count: int
    seed: int | None

    def __post_init__(self):
        grid = np.asarray(self.energy_grid, dtype=float)
        rate = np.asarray(self.max_rate, dtype=float)
        if grid.shape != rate.shape or grid.ndim != 1 or len(grid) < 2:
            raise InvalidInputError("energy_grid and max_rate must be matching 1-D arrays")
        grid.setflags(write=False)
        rate.setflags(write=False)
        object.__setattr__(self, "energy_grid", grid)
        object.__setattr__(self, "max_rate", rate)

    @property
    def q_max(self) -> float:
        return float(self.energy_grid[-1])

    def rate_at(self, threshold: float) -> float:
        """Envelope value at an arbitrary threshold, conservatively.

        Looks up the first grid point >= threshold, which never overstates
        the true envelope (it is non-increasing); 0 beyond the grid.
        """
        if threshold > self.energy_grid[-1]:
            return 0.0
        idx = int(np.searchsorted(self.energy_grid, threshold, side="left"))
        return float(self.max_rate[idx])


def _staircase(rates: np.ndarray, harvested: np.ndarray, grid: np.ndarray) -> np.ndarray:
    """max rate over points with harvested >= q, per grid threshold q; 0 if none."""
    order = np.argsort(harvested)[::-1]
    h_desc = harvested[order]
    best = np.maximum.accumulate(rates[order])
    qualifying = np.searchsorted(-h_desc, -grid, side="right")
    return np.where(qualifying > 0, best[np.maximum(qualifying - 1, 0)], 0.0)


def sample_split_ratios(dim: int, samples: int, seed: int, workers: int = 1) -> np.ndarray:
    """Uniform [0,1]^dim draws, chunk-seeded; identical for any worker count."""
    n_chunks = (samples + SAMPLE_CHUNK - 1) // SAMPLE_CHUNK
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    sizes = [min(SAMPLE_CHUNK, samples - i * SAMPLE_CHUNK) for i in range(n_chunks)]

    def draw(i: int) -> np.ndarray:
        return np.random.default_rng(children[i]).random((sizes[i], dim))

    if workers > 1 and n_chunks > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(draw, range(n_chunks)))
    else:
        chunks = [draw(i) for i in range(n_chunks)]
    return np.vstack(chunks)


def trace_monte_carlo(
    evaluator: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]],
    dim: int,
    samples: int = 100_000,
    seed: int = 0,
    grid_size: int = DEFAULT_GRID_SIZE,
    workers: int = 1,
) -> RERegion:
    """Trace the region by random search over split vectors.

    The all-zeros and all-ones corners are always injected so the extreme
    points are exact regardless of sampling luck. The energy grid spans
    [0, Q_max] with Q_max the harvested power at the all-zeros corner.
    """
    if samples < 1:
        raise InvalidInputError(f"samples must be >= 1, got {samples!r}")
    if grid_size < 2:
        raise InvalidInputError(f"grid_size must be >= 2, got {grid_size!r}")
    corners = np.vstack([np.zeros((1, dim)), np.ones((1, dim))])
    rho = np.vstack([corners, sample_split_ratios(dim, samples, seed, workers)])

    if workers > 1:
        bounds = list(range(0, len(rho), SAMPLE_CHUNK)) + [len(rho)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(lambda i: evaluator(rho[bounds[i] : bounds[i + 1]]), range(len(bounds) - 1))
            )
        rates = np.concatenate([p[0] for p in parts])
        harvested = np.concatenate([p[1] for p in parts])
    else:
        rates, harvested = evaluator(rho)

    q_max = harvested[0]  # all-zeros corner harvests everything
    grid = np.linspace(0.0, q_max, grid_size)
    return RERegion(
        energy_grid=grid,
        max_rate=_staircase(rates, harvested, grid),
        method="monte-carlo",
        sample_count=samples,
        seed=seed,
    )


def pareto_envelope(points: Sequence[REPoint], grid_size: int = DEFAULT_GRID_SIZE) -> RERegion:
    """Staircase upper envelope of explicit points on [0, max harvested]."""
    if len(points) == 0:
        raise InvalidInputError("cannot build an envelope from zero points")
    if grid_size < 2:
        raise InvalidInputError(f"grid_size must be >= 2, got {grid_size!r}")
    rates = np.array([p.rate for p in points])
    harvested = np.array([p.harvested for p in points])
    grid = np.linspace(0.0, float(harvested.max()), grid_size)
    return RERegion(
        energy_grid=grid,
        max_rate=_staircase(rates, harvested, grid),
        method="monte-carlo",
        sample_count=len(points),
        seed=None,
    )


StreamFunctions = Sequence[tuple[Callable[[np.ndarray], np.ndarray], Callable[[np.ndarray], np.ndarray]]]


def stream_evaluators(
    mode_channel: ModeChannel, budget: LinkBudget, tol: float = 1e-9
) -> StreamFunctions:
    """Per-stream (rate, harvest) functions of the separable aligned model.

    Only a diagonal mode channel decomposes into independent streams; a
    leakage-coupled one (misaligned pose) raises UnsupportedModelError.
    """
    if mode_channel.diagonality() > tol:
        raise UnsupportedModelError(
            f"mode channel is interference-coupled (off-diagonal level "
            f"{mode_channel.diagonality():.3e} > {tol:.1e}); the separable oracle does not apply"
        )
    g = np.abs(np.diag(mode_channel.effective_gains)) ** 2
    p = budget.stream_powers(len(g))
    sigma2 = budget.channel_noise
    scov = budget.conversion_noise
    zeta = budget.conversion_efficiency
    streams = []
    for k in range(len(g)):
        signal = p[k] * g[k]

        def rate(rho, signal=signal):
            rho = np.asarray(rho, dtype=float)
            denominator = rho * sigma2 + scov
            sinr = np.divide(
                rho * signal, denominator,
                out=np.zeros_like(denominator), where=denominator > 0.0,
            )
            return np.log2(1.0 + sinr)

        def harvest(rho, signal=signal):
            return zeta * (1.0 - np.asarray(rho, dtype=float)) * (signal + sigma2)

        streams.append((rate, harvest))
    return streams


def trace_lagrangian(
    per_stream: StreamFunctions,
    mu_grid: np.ndarray | None = None,
    rho_grid_size: int = DEFAULT_RHO_GRID,
    grid_size: int = DEFAULT_GRID_SIZE,
) -> RERegion:
    """Oracle envelope of the separable model via multiplier scalarization.

    For each mu, each stream independently maximizes R_l + mu*Q_l over a
    dense rho grid; the summed optimum D(mu) yields the supporting line
    rate = D(mu) - mu*q. The envelope is the lower envelope of those lines,
    clipped at zero: the boundary of the convexified region, outer-approximated,
    hence an upper bound on every achievable point.
    """
    if rho_grid_size < 2:
        raise InvalidInputError(f"rho_grid_size must be >= 2, got {rho_grid_size!r}")
    if grid_size < 2:
        raise InvalidInputError(f"grid_size must be >= 2, got {grid_size!r}")
    rho = np.linspace(0.0, 1.0, rho_grid_size)
    rate_tab = np.stack([r(rho) for r, _ in per_stream])      # (streams, rho)
    harvest_tab = np.stack([q(rho) for _, q in per_stream])

    q_max = float(harvest_tab[:, 0].sum())  # rho = 0 harvests everything
    if mu_grid is None:
        rate_scale = float(rate_tab.max(axis=1).sum())
        ratio = rate_scale / q_max if q_max > 0 else 1.0
        mu_grid = np.concatenate([[0.0], np.geomspace(ratio * 1e-4, ratio * 1e4, DEFAULT_MU_COUNT)])
    else:
        mu_grid = np.asarray(mu_grid, dtype=float)
        if np.any(mu_grid < 0):
            raise InvalidInputError("multipliers must be nonnegative")

    # D(mu) = sum over streams of max_rho (R + mu*Q); one pass per multiplier
    d_mu = np.array([np.max(rate_tab + mu * harvest_tab, axis=1).sum() for mu in mu_grid])
    grid = np.linspace(0.0, q_max, grid_size)
    envelope = np.maximum(0.0, np.min(d_mu[:, None] - mu_grid[:, None] * grid[None, :], axis=0))
    return RERegion(
        energy_grid=grid,
        max_rate=envelope,
        method="lagrangian",
        sample_count=len(mu_grid) * rho_grid_size,
        seed=None,
    )


def lagrangian_points(
    per_stream: StreamFunctions,
    mu_grid: np.ndarray,
    rho_grid_size: int = DEFAULT_RHO_GRID,
) -> list[REPoint]:
    """The boundary points the scalarization visits, one per multiplier."""
    rho = np.linspace(0.0, 1.0, rho_grid_size)
    rate_tab = np.stack([r(rho) for r, _ in per_stream])
    harvest_tab = np.stack([q(rho) for _, q in per_stream])
    points = []
    for mu in np.asarray(mu_grid, dtype=float):
        best = np.argmax(rate_tab + mu * harvest_tab, axis=1)
        idx = np.arange(len(per_stream))
        points.append(
            REPoint(
                rate=float(rate_tab[idx, best].sum()),
                harvested=float(harvest_tab[idx, best].sum()),
            )
        )
    return points
