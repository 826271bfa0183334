"""Major scales along a hexatonic cycle.

No single scale holds the cycle, but short runs of it can be followed by
scales a fifth apart.
"""

from hexdual.diatonic import (
    containing_scale_exists,
    containment_table,
    covering_chains,
    douthett_sequence_check,
    edge_transitions,
)
from hexdual.hexatonic import hex_cycle

cycle = hex_cycle(0)
print("one scale holds all six chords?", containing_scale_exists(cycle))

print("\nscales per chord (* = used by a P-move):")
for row in containment_table(cycle):
    print(f"  {row['triad']:<3}", *(s + ("*" if s in row["p_move"] else "") for s in row["scales"]))

print("\nscale pairs a fifth apart carrying each move:")
for a, b in zip(cycle.chords, cycle.chords[1:]):
    pairs = edge_transitions(a, b)
    print(f"  {a.name:>2} -> {b.name:<2} {len(pairs)}:", ", ".join(f"{x.name}/{y.name}" for x, y in pairs))

check = douthett_sequence_check(cycle)
print("\none scale per chord, falling by whole steps:", check.holds)
for triad, scale, _ in check.pairs:
    print(f"  {triad:<3} in {scale}")

for n in (4, 5):
    chains = covering_chains(cycle, n)
    print(f"\nchains of {n}:", ", ".join(map(str, chains)) or "none")
