"""Which set classes of Z12 admit a maximally smooth cycle?

Every one of the 224 T/I set classes is searched; only six qualify.
"""

from hexdual.smoothness import all_set_classes, classify_all, exemplars

print(len(all_set_classes()), "set classes in total")
for s in classify_all():
    c = s.set_class
    print(f"  {str(c):<28} {len(exemplars(c)):>2} members, cycles of length {s.cycle_lengths}")

triads = classify_all(3)[0]
print("\nthe four consonant-triad cycles:")
for m in triads.cycles:
    print("  ", " ".join("".join(f"{x:x}" for x in sorted(ch)) for ch in m.chords))
