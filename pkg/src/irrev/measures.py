"""Pattern histograms and the TIR / AIR irreversibility measures.

Both measures compare the ordinal pattern distribution of a series against
the distribution obtained after a window transform:

* TIR (time irreversibility): windows are order-reversed.
* AIR (amplitude irreversibility): windows are negated. Mean subtraction is
  unnecessary because ordinal patterns are shift-invariant.

The probabilistic difference per pattern is the subtraction-based Ys
divergence, which stays well behaved when the counterpart pattern is
forbidden (zero probability). The measure value is

    value = 1/2 * sum over patterns of Ys(H(pi), G(pi))

where H and G are the forward and transformed histograms. On tie-free data
(and for AIR under the equal-value scheme) this reduces to a sum over
unordered pattern pairs {pi, pi*} with the symmetric counterpart pi*, which
is how the per-pair decomposition in the report is presented.

Counts are exact integers; the value is accumulated in rational arithmetic
and converted to float once, so invariance identities (affine, reversal,
negation) hold exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DomainError, NonFiniteSample, SeriesTooShort
from .ordinal import (
    SCHEME_EQUAL_VALUE,
    EmbeddingConfig,
    Pattern,
    amplitude_reverse,
    time_reverse_tie_free,
)

TRANSFORM_IDENTITY = "identity"
TRANSFORM_TIME_REVERSE = "time-reverse"
TRANSFORM_NEGATE = "negate"
_TRANSFORMS = (TRANSFORM_IDENTITY, TRANSFORM_TIME_REVERSE, TRANSFORM_NEGATE)

KIND_TIR = "TIR"
KIND_AIR = "AIR"
_KINDS = (KIND_TIR, KIND_AIR)

SAME_BIN = "same-bin"


@dataclass(frozen=True)
class PatternHistogram:
    """Exact pattern counts over all windows of a series under a transform."""

    config: EmbeddingConfig
    transform: str
    counts: dict[Pattern, int]
    n_windows: int
    n_tied_windows: int = 0

    def probability(self, pattern: Pattern) -> float:
        return self.counts.get(pattern, 0) / self.n_windows

    def probabilities(self) -> dict[Pattern, float]:
        return {p: c / self.n_windows for p, c in self.counts.items()}


@dataclass(frozen=True)
class PairContribution:
    """One unordered pattern pair (or histogram bin) and its Ys term."""

    pattern: Pattern
    counterpart: Pattern | str  # a Pattern, or SAME_BIN
    p_forward: float
    p_counterpart: float
    ys: float


@dataclass(frozen=True)
class IrreversibilityReport:
    kind: str
    config: EmbeddingConfig
    value: float
    pairs: list[PairContribution] = field(repr=False)
    n_observed_patterns: int
    n_forbidden_counterparts: int
    n_windows: int


def _validated_series(series) -> np.ndarray:
    x = np.asarray(series, dtype=float)
    if x.ndim != 1:
        raise ValueError("series must be one-dimensional")
    if not np.isfinite(x).all():
        bad = int(np.flatnonzero(~np.isfinite(x))[0])
        raise NonFiniteSample(f"non-finite sample at index {bad}")
    return x

def _window_matrix(x: np.ndarray, m: int, tau: int) -> np.ndarray:
    n_windows = len(x) - (m - 1) * tau
    if n_windows < 1:
        raise SeriesTooShort(
            f"need at least {(m - 1) * tau + 1} samples for m={m}, tau={tau}; "
            f"got {len(x)}"
        )
    idx = np.arange(n_windows)[:, None] + tau * np.arange(m)[None, :]
    return x[idx]


def _pattern_codes(windows: np.ndarray, config: EmbeddingConfig) -> np.ndarray:
    """Encode each window row as a single integer pattern code.

    Codes are the label sequence in base (m + 1); labels are the 1-based
    positions in ascending value order (stable for ties), collapsed to the
    tie-group minimum under the equal-value scheme.
    """
    m = config.m
    order = np.argsort(windows, axis=1, kind="stable")
    labels = order + 1

    sv = np.take_along_axis(windows, order, axis=1)
    tied = (sv[:, 1:] - sv[:, :-1]) <= config.tie_epsilon
    n_tied_windows = int(np.count_nonzero(tied.any(axis=1)))

    if config.scheme == SCHEME_EQUAL_VALUE:
        # Forward min pass leaves the full-run minimum on the run's last
        # element; the backward pass copies it over the whole run.
        for k in range(1, m):
            labels[:, k] = np.where(
                tied[:, k - 1],
                np.minimum(labels[:, k - 1], labels[:, k]),
                labels[:, k],
            )
        for k in range(m - 2, -1, -1):
            labels[:, k] = np.where(tied[:, k], labels[:, k + 1], labels[:, k])

    weights = (m + 1) ** np.arange(m, dtype=np.int64)
    return labels.astype(np.int64) @ weights, n_tied_windows


def _decode(code: int, m: int, scheme: str) -> Pattern:
    labels = []
    base = m + 1
    for _ in range(m):
        labels.append(int(code % base))
        code //= base
    return Pattern(tuple(labels), scheme)


def build_histogram(
    series, config: EmbeddingConfig, transform: str = TRANSFORM_IDENTITY
) -> PatternHistogram:
    """Count patterns over every window of the series under a transform."""
    if transform not in _TRANSFORMS:
        raise ValueError(f"transform must be one of {_TRANSFORMS}, got {transform!r}")
    x = _validated_series(series)
    windows = _window_matrix(x, config.m, config.tau)
    if transform == TRANSFORM_TIME_REVERSE:
        windows = windows[:, ::-1]
    elif transform == TRANSFORM_NEGATE:
        windows = -windows

    codes, n_tied = _pattern_codes(windows, config)
    unique, n = np.unique(codes, return_counts=True)
    counts = {
        _decode(int(c), config.m, config.scheme): int(k)
        for c, k in zip(unique, n)
    }
    return PatternHistogram(config, transform, counts, len(codes), n_tied)


def ys_divergence(a: float, b: float) -> float:
    """Subtraction-based pairwise divergence p_i (p_i - p_j) / (p_i + p_j).

    Inputs are unordered probabilities; internally p_i = max(a, b). Returns
    0 for the 0/0 case, and Ys(p, 0) = p for forbidden counterparts.
    """
    if not (0.0 <= a <= 1.0) or not (0.0 <= b <= 1.0):
        raise DomainError(f"probabilities must lie in [0,1], got {a}, {b}")
    p_i, p_j = (a, b) if a >= b else (b, a)
    if p_j == 0.0:
        return p_i  # Ys(p, 0) = p exactly, including the 0/0 case
    return p_i * (p_i - p_j) / (p_i + p_j)


def _ys_exact(ci: int, cj: int, n_windows: int) -> Fraction:
    """Ys on exact count ratios ci/n, cj/n."""
    if ci < cj:
        ci, cj = cj, ci
    if ci == 0:
        return Fraction(0)
    return Fraction(ci, n_windows) * Fraction(ci - cj, ci + cj)


def _counterpart_map(kind: str, scheme: str, data_tie_free: bool):
    """Pattern-level symmetry map when it is exact, else None.

    Amplitude reversal matches window negation for every equal-value pattern
    and on tie-free data under any scheme; the time-reversal map is exact on
    tie-free data only. Otherwise the caller keeps the dual-histogram
    pairing, which never relies on a pattern-level map.
    """
    if kind == KIND_AIR and (scheme == SCHEME_EQUAL_VALUE or data_tie_free):
        return amplitude_reverse
    if kind == KIND_TIR and data_tie_free:
        return time_reverse_tie_free
    return None


def measure(series, config: EmbeddingConfig, kind: str) -> IrreversibilityReport:
    """Compute TIR or AIR with full per-pair decomposition."""
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    transform = TRANSFORM_TIME_REVERSE if kind == KIND_TIR else TRANSFORM_NEGATE
    fwd = build_histogram(series, config, TRANSFORM_IDENTITY)
    bwd = build_histogram(series, config, transform)
    n = fwd.n_windows

    support = sorted(set(fwd.counts) | set(bwd.counts), key=lambda p: p.labels)
    total = Fraction(0)
    for p in support:
        total += _ys_exact(fwd.counts.get(p, 0), bwd.counts.get(p, 0), n)
    value = float(total / 2)

    counterpart_of = _counterpart_map(
        kind, config.scheme, fwd.n_tied_windows == 0
    )
    pairs: list[PairContribution] = []
    if counterpart_of is not None:
        seen: set[Pattern] = set()
        for p in support:
            if p in seen:
                continue
            q = counterpart_of(p)
            seen.update((p, q))
            pf = fwd.probability(p)
            pc = fwd.probability(q)
            if p == q:
                pairs.append(PairContribution(p, SAME_BIN, pf, pc, 0.0))
            else:
                pairs.append(
                    PairContribution(p, q, pf, pc, ys_divergence(pf, pc))
                )
    else:
        # Tied patterns with no exact pattern-level map: pair each bin of the
        # forward histogram with the same bin of the transformed histogram.
        for p in support:
            pf = fwd.probability(p)
            pc = bwd.probability(p)
            pairs.append(
                PairContribution(p, SAME_BIN, pf, pc, ys_divergence(pf, pc) / 2)
            )

    n_forbidden = sum(1 for p in fwd.counts if bwd.counts.get(p, 0) == 0)
    return IrreversibilityReport(
        kind=kind,
        config=config,
        value=value,
        pairs=pairs,
        n_observed_patterns=len(fwd.counts),
        n_forbidden_counterparts=n_forbidden,
        n_windows=n,
    )


def sweep(
    series,
    m_range,
    tau_range,
    scheme: str = SCHEME_EQUAL_VALUE,
    kinds=(KIND_TIR, KIND_AIR),
    tie_epsilon: float = 0.0,
) -> list[IrreversibilityReport]:
    """One report per (kind, m, tau) cell, in deterministic cell order."""
    m_range = list(m_range)
    tau_range = list(tau_range)
    kinds = list(kinds)
    for k in kinds:
        if k not in _KINDS:
            raise ValueError(f"unknown measure kind {k!r}")
    reports = []
    for kind in kinds:
        for m in m_range:
            for tau in tau_range:
                config = EmbeddingConfig(m=m, tau=tau, scheme=scheme,
                                         tie_epsilon=tie_epsilon)
                try:
                    reports.append(measure(series, config, kind))
                except SeriesTooShort as exc:
                    raise SeriesTooShort(
                        f"sweep cell kind={kind} m={m} tau={tau}: {exc}"
                    ) from exc
    return reports
