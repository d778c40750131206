"""IAAFT surrogate generation and percentile-based significance testing.

Surrogates preserve the original amplitude distribution exactly (the output
is the rank-ordered variant) and approximate its power spectrum through
iterative refinement. Each ensemble member is seeded from a splitmix64-style
mix of (seed, index), so ensembles are reproducible and independent of
generation order or concurrency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSeries, DomainError, EmptyInput, TooShort
from .measures import measure
from .ordinal import EmbeddingConfig

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15  # splitmix64 stream increment


def mix_seed(seed: int, index: int) -> int:
    """64-bit mix of (seed, index): one splitmix64 output of the shifted state.

    fmix64 finalizer from splitmix64 applied to ``seed + (index+1) * golden``;
    fixed here so ensembles are reproducible across machines and runs.
    """
    z = (int(seed) + (int(index) + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


@dataclass(frozen=True)
class IaaftParams:
    max_iterations: int = 1000
    seed: int = 0
    n_surrogates: int = 500

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.n_surrogates < 1:
            raise ValueError("n_surrogates must be >= 1")


@dataclass(frozen=True)
class IaaftDiagnostics:
    iterations_used: int
    spectrum_rms_error: float
    initial_spectrum_rms_error: float
    converged: bool


@dataclass(frozen=True)
class SurrogateVerdict:
    original_value: float
    surrogate_values: list[float]
    p2_5: float
    p97_5: float
    significant_above: bool
    significant_below: bool


def _rel_spectrum_error(mag: np.ndarray, target_mag: np.ndarray) -> float:
    return float(
        np.sqrt(np.mean((mag - target_mag) ** 2))
        / np.sqrt(np.mean(target_mag**2))
    )


def iaaft(series, params: IaaftParams, index: int = 0):
    """One IAAFT surrogate plus convergence diagnostics.

    Alternates spectrum adjustment (impose the original magnitude spectrum,
    keep current phases; the DC bin keeps the original value and zero-
    magnitude bins get zero phase) with rank ordering (replace values by the
    original's sorted values at the current ranks, ties broken by index).
    Stops when the rank permutation repeats between consecutive iterations
    or ``max_iterations`` is reached; returns the rank-ordered series.
    """
    x = np.asarray(series, dtype=float)
    n = len(x)
    if n < 8:
        raise TooShort(f"IAAFT needs at least 8 samples, got {n}")
    if not np.isfinite(x).all():
        raise DegenerateSeries("series contains non-finite samples")
    if np.all(x == x[0]):
        raise DegenerateSeries("constant series has no non-DC spectral content")

    target = np.fft.rfft(x)
    target_mag = np.abs(target)
    sorted_x = np.sort(x)

    rng = np.random.default_rng(mix_seed(params.seed, index))
    cur = x[rng.permutation(n)]

    prev_order = None
    initial_err = math.nan
    err = math.nan
    converged = False
    iterations = 0
    for iterations in range(1, params.max_iterations + 1):
        f = np.fft.rfft(cur)
        mag = np.abs(f)
        err = _rel_spectrum_error(mag, target_mag)
        if iterations == 1:
            initial_err = err
        phase = np.where(mag > 0, f / np.where(mag > 0, mag, 1.0), 1.0)
        f_new = target_mag * phase
        f_new[0] = target[0]
        y = np.fft.irfft(f_new, n)

        order = np.argsort(y, kind="stable")
        cur = np.empty_like(cur)
        cur[order] = sorted_x
        if prev_order is not None and np.array_equal(order, prev_order):
            converged = True
            break
        prev_order = order

    final_err = _rel_spectrum_error(np.abs(np.fft.rfft(cur)), target_mag)
    diagnostics = IaaftDiagnostics(
        iterations_used=iterations,
        spectrum_rms_error=final_err,
        initial_spectrum_rms_error=initial_err,
        converged=converged,
    )
    return cur, diagnostics


def percentile_nearest_rank(values, q: float) -> float:
    """Nearest-rank percentile: element at 1-based rank ceil(q/100 * N)."""
    values = sorted(float(v) for v in values)
    if not values:
        raise EmptyInput("percentile of an empty list")
    if not 0.0 < q < 100.0:
        raise DomainError(f"q must lie in (0, 100), got {q}")
    rank = math.ceil(q / 100.0 * len(values))
    return values[rank - 1]


def significance_test(
    series, config: EmbeddingConfig, kind: str, params: IaaftParams
) -> SurrogateVerdict:
    """Compare a measure value against an IAAFT surrogate ensemble."""
    original = measure(series, config, kind).value
    surrogate_values = []
    for i in range(params.n_surrogates):
        surrogate, _ = iaaft(series, params, i)
        surrogate_values.append(measure(surrogate, config, kind).value)

    p2_5 = percentile_nearest_rank(surrogate_values, 2.5)
    p97_5 = percentile_nearest_rank(surrogate_values, 97.5)
    return SurrogateVerdict(
        original_value=original,
        surrogate_values=surrogate_values,
        p2_5=p2_5,
        p97_5=p97_5,
        significant_above=original > p97_5,
        significant_below=original < p2_5,
    )
