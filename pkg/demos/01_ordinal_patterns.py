"""Ordinal patterns and their two symmetry transforms.

A window of m samples is summarized by the order of its values: list the
positions (1-based) from smallest to largest sample. Equal values matter;
the equal-value scheme gives every member of a tie group the group's lowest
position, which keeps negation symmetry intact.
"""

from irrev import (
    EmbeddingConfig,
    Pattern,
    amplitude_reverse,
    canonical_representative,
    extract_pattern,
    time_reverse_tie_free,
)

ev = EmbeddingConfig(m=5, scheme="equal-value")
orig = EmbeddingConfig(m=5, scheme="original")

w = [3, 1, 9, 5, 7]
print(f"window {w}")
print(f"  pattern:           {extract_pattern(w, ev)}")
print(f"  reversed window:   {extract_pattern(w[::-1], ev)}")
print(f"  negated window:    {extract_pattern([-v for v in w], ev)}")
print()

# Pattern-level shortcuts for the same transforms (tie-free case):
p = extract_pattern(w, ev)
print(f"time_reverse_tie_free({p}) = {time_reverse_tie_free(p)}")
print(f"amplitude_reverse({p})     = {amplitude_reverse(p)}")
print()

# With ties, the two schemes disagree, and only the equal-value scheme
# keeps the negation law extract(-w) == amplitude_reverse(extract(w)):
t = [3, 1, 7, 1, 5]
nt = [-v for v in t]
print(f"tied window {t}")
print(f"  original scheme:    {extract_pattern(t, orig)}  "
      f"negated -> {extract_pattern(nt, orig)}")
print(f"  equal-value scheme: {extract_pattern(t, ev)}  "
      f"negated -> {extract_pattern(nt, ev)}")
print(f"  amplitude_reverse of equal-value pattern: "
      f"{amplitude_reverse(extract_pattern(t, ev))}")
print()

# Every valid pattern has a small integer witness window:
for labels in [(2, 2, 1, 5, 3), (1, 2, 3), (1, 1)]:
    print(f"canonical_representative({labels}) = "
          f"{canonical_representative(Pattern(labels))}")
