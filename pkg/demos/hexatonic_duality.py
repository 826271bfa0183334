"""The PL-group and {T0,T4,T8,I1,I5,I9} acting on the Eb hexatonic cycle.

Walks through the argument: find the set-wise stabilizer by search, restrict
both groups to the six chords, then check each is the other's centralizer.
"""

from hexdual import groups
from hexdual.hexatonic import group_names, hex_cycle, hex_set, hex_ti_stabilizer, pl_group

cycle = hex_cycle(0)
print("cycle:", " -> ".join(cycle.names()))
print("pitch classes:", sorted(cycle.pcs))

h = hex_ti_stabilizer()
print("T/I ops preserving the set:", ", ".join(group_names(h)))

hexes = hex_set(0)
pl_bar = groups.restrict(pl_group(), hexes)
h_bar = groups.restrict(h, hexes)
for label, g in (("PL", pl_bar), ("H", h_bar)):
    print(f"{label}: order {g.order}, {groups.classify(g)}, simply transitive: {groups.is_simply_transitive(g)}")

# 720 permutations of six chords is small enough to scan outright.
print("C(PL) == H:", groups.centralizer_brute(pl_bar) == h_bar)
print("C(H) == PL:", groups.centralizer_brute(h_bar) == pl_bar)

eb = hexes[[t.name for t in hexes].index("Eb")]
print("\nwhere each element of H sends Eb:")
for p in sorted(h, key=lambda p: group_names(h).index(p.label)):
    print(f"  {p.label:>3}: Eb -> {p(eb).name}")
