"""Ordinal pattern extraction and pattern symmetry transforms.

A window of ``m`` samples is encoded by listing its positions (1-based) in
ascending value order. Two tie-handling schemes are supported:

* ``"original"`` -- ties are broken by order of occurrence, so every pattern
  is a permutation of ``1..m``.
* ``"equal-value"`` -- every member of a tie group carries the group's lowest
  position index, e.g. ``{3,1,7,1,5}`` encodes to ``(2,2,1,5,3)``.

Two symmetry transforms act on patterns: amplitude reversal (the pattern of
the negated window; label-sequence reversal) and time reversal (the pattern
of the reversed window; positional complement, defined only for tie-free
patterns).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    InvalidPattern,
    LengthMismatch,
    NonFiniteSample,
    ParseError,
    TiedPatternUnsupported,
)

SCHEME_ORIGINAL = "original"
SCHEME_EQUAL_VALUE = "equal-value"
_SCHEMES = (SCHEME_ORIGINAL, SCHEME_EQUAL_VALUE)


@dataclass(frozen=True)
class EmbeddingConfig:
    """Embedding dimension, delay and tie handling for pattern extraction.

    Two samples a, b are tied iff ``|a - b| <= tie_epsilon``; the default
    ``tie_epsilon = 0`` means exact equality. With ``tie_epsilon > 0`` the
    relation is applied transitively by chaining adjacent sorted samples.
    """

    m: int
    tau: int = 1
    scheme: str = SCHEME_EQUAL_VALUE
    tie_epsilon: float = 0.0

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError(f"dimension m must be an integer >= 2, got {self.m}")
        if not isinstance(self.tau, int) or self.tau < 1:
            raise ValueError(f"delay tau must be an integer >= 1, got {self.tau}")
        if self.scheme not in _SCHEMES:
            raise ValueError(f"scheme must be one of {_SCHEMES}, got {self.scheme!r}")
        if self.tie_epsilon < 0:
            raise ValueError("tie_epsilon must be non-negative")


@dataclass(frozen=True)
class Pattern:
    """An ordinal pattern: 1-based position labels in ascending value order."""

    labels: tuple[int, ...]
    scheme: str = SCHEME_EQUAL_VALUE

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(v) for v in self.labels))
        if self.scheme not in _SCHEMES:
            raise ValueError(f"scheme must be one of {_SCHEMES}, got {self.scheme!r}")

    @property
    def m(self) -> int:
        return len(self.labels)

    def is_tie_free(self) -> bool:
        return len(set(self.labels)) == len(self.labels)

    def __str__(self) -> str:
        return pattern_to_string(self)


def _tie_groups(sorted_values, tie_epsilon):
    """Split the index range of an ascending value list into tie groups.

    Groups are maximal runs of adjacent sorted values whose consecutive gaps
    are all <= tie_epsilon (transitive chaining for tie_epsilon > 0).
    """
    groups = []
    start = 0
    for k in range(1, len(sorted_values)):
        if sorted_values[k] - sorted_values[k - 1] > tie_epsilon:
            groups.append((start, k))
            start = k
    groups.append((start, len(sorted_values)))
    return groups


def extract_pattern(window, config: EmbeddingConfig) -> Pattern:
    """Encode one window of ``config.m`` samples as an ordinal pattern."""
    values = [float(v) for v in window]
    if len(values) != config.m:
        raise LengthMismatch(
            f"window has {len(values)} samples, config.m = {config.m}"
        )
    for v in values:
        if not math.isfinite(v):
            raise NonFiniteSample(f"non-finite sample {v!r} in window")

    # Stable sort by value keeps tied samples in position order.
    order = sorted(range(config.m), key=lambda i: (values[i], i))
    labels = [i + 1 for i in order]

    if config.scheme == SCHEME_EQUAL_VALUE:
        sorted_values = [values[i] for i in order]
        for lo, hi in _tie_groups(sorted_values, config.tie_epsilon):
            if hi - lo > 1:
                group_min = min(labels[lo:hi])
                labels[lo:hi] = [group_min] * (hi - lo)

    return Pattern(tuple(labels), config.scheme)


def amplitude_reverse(pattern: Pattern) -> Pattern:
    """Pattern of the negated window: the label sequence reversed.

    An involution. Under the equal-value scheme this equals
    ``extract_pattern(-w)`` for every window ``w``; under the original scheme
    only for tie-free windows.
    """
    return Pattern(pattern.labels[::-1], pattern.scheme)


def time_reverse_tie_free(pattern: Pattern) -> Pattern:
    """Pattern of the reversed window: elementwise complement ``m + 1 - label``.

    Only defined for tie-free patterns; for tied patterns the map is
    ambiguous (different preimages reverse to different patterns) and the
    dual-histogram route in :mod:`irrev.measures` must be used instead.
    """
    if not pattern.is_tie_free():
        raise TiedPatternUnsupported(
            f"time reversal is undefined for tied pattern {pattern}"
        )
    m = pattern.m
    return Pattern(tuple(m + 1 - v for v in pattern.labels), pattern.scheme)


def is_self_symmetric(pattern: Pattern, symmetry: str) -> bool:
    """True iff the given transform maps the pattern to itself."""
    if symmetry == "amplitude":
        return amplitude_reverse(pattern) == pattern
    if symmetry == "time":
        return time_reverse_tie_free(pattern) == pattern
    raise ValueError(f"symmetry must be 'amplitude' or 'time', got {symmetry!r}")


def _runs(labels):
    """Maximal runs of equal adjacent labels as (label, length) pairs."""
    runs = []
    k = 0
    while k < len(labels):
        j = k
        while j + 1 < len(labels) and labels[j + 1] == labels[k]:
            j += 1
        runs.append((labels[k], j - k + 1))
        k = j + 1
    return runs


def canonical_representative(pattern: Pattern) -> list[int]:
    """Build a small integer window whose pattern equals the input.

    Doubles as the validity check: raises :class:`InvalidPattern` when no
    window can realize the label sequence. Validity requires each label to
    occur in a single consecutive run, and the positions absent from the
    label multiset to be assignable to tie runs such that every assigned
    position exceeds its run's label (the run label is the group minimum).
    """
    labels = pattern.labels
    m = len(labels)
    if any(v < 1 or v > m for v in labels):
        raise InvalidPattern(f"labels of {labels} out of range 1..{m}")

    runs = _runs(labels)
    run_labels = [v for v, _ in runs]
    if len(set(run_labels)) != len(run_labels):
        raise InvalidPattern(f"label repeated in non-adjacent runs in {labels}")

    if pattern.scheme == SCHEME_ORIGINAL and len(runs) != m:
        raise InvalidPattern(
            f"{labels} has tied labels, not allowed under the original scheme"
        )

    missing = sorted(set(range(1, m + 1)) - set(run_labels))

    # Greedy matching: missing positions ascending, runs by label ascending;
    # a position may only join a run whose label is smaller.
    need = {v: length - 1 for v, length in runs}
    members = {v: [v] for v, _ in runs}
    needy = sorted(v for v in need if need[v] > 0)
    for pos in missing:
        chosen = None
        for v in needy:
            if need[v] > 0 and v < pos:
                chosen = v
                break
        if chosen is None:
            raise InvalidPattern(
                f"no tie run can absorb position {pos} in {labels}"
            )
        members[chosen].append(pos)
        need[chosen] -= 1

    window = [0] * m
    for rank, (v, _) in enumerate(runs, start=1):
        for pos in members[v]:
            window[pos - 1] = rank
    return window


def pattern_to_string(pattern: Pattern) -> str:
    """Codec used in all reports: comma-separated labels, no spaces."""
    return ",".join(str(v) for v in pattern.labels)


def pattern_from_string(text: str, scheme: str = SCHEME_EQUAL_VALUE) -> Pattern:
    """Parse the ``"l1,l2,...,lm"`` codec; validates realizability."""
    parts = text.split(",")
    try:
        labels = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(1, text, "pattern labels must be integers") from None
    if len(labels) < 2:
        raise ParseError(1, text, "pattern needs at least 2 labels")
    pattern = Pattern(labels, scheme)
    canonical_representative(pattern)  # raises InvalidPattern when unrealizable
    return pattern
