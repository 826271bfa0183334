"""Which major scales contain the chords of a hexatonic cycle.

"Diatonic set" means the seven tones of a major scale. Scale-to-scale
smoothness reuses the pitch-class-set criterion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hexatonic import HexCycle, hex_cycle
from .pitchspace import MOD, PC_NAMES
from .smoothness import is_ms_transition
from .triads import Triad, as_triad

MAJOR_STEPS = (0, 2, 4, 5, 7, 9, 11)

# Scale roots (relative to the triad root) listed in degree order: a major
# triad sits on degrees 1, 4, 5; a minor triad on degrees 6, 2, 3.
_MAJOR_TRIAD_SCALES = (0, -5, -7)
_MINOR_TRIAD_SCALES = (3, -2, -4)


@dataclass(frozen=True)
class DiatonicSet:
    root: int

    def __post_init__(self):
        object.__setattr__(self, "root", self.root % MOD)

    @property
    def tones(self) -> frozenset[int]:
        return frozenset((self.root + s) % MOD for s in MAJOR_STEPS)

    @property
    def name(self) -> str:
        return f"{PC_NAMES[self.root]}-major"

    def __contains__(self, t) -> bool:
        return as_triad(t).pcs <= self.tones

    def __str__(self) -> str:
        return self.name


def major_scale(root: int) -> DiatonicSet:
    return DiatonicSet(root)


def all_scales() -> list[DiatonicSet]:
    return [DiatonicSet(r) for r in range(MOD)]


def scales_containing(t) -> list[DiatonicSet]:
    """Every major scale containing the triad, found by search.

    Ordered by the degree the triad occupies (1, 4, 5 for major; 6, 2, 3 for
    minor), which is how containment tables are usually laid out.
    """
    t = as_triad(t)
    found = {s.root: s for s in all_scales() if t.pcs <= s.tones}
    offsets = _MAJOR_TRIAD_SCALES if t.is_major else _MINOR_TRIAD_SCALES
    rank = {(t.root + off) % MOD: i for i, off in enumerate(offsets)}
    return sorted(found.values(), key=lambda s: rank.get(s.root, len(rank) + s.root))


def is_ms_scale_transition(a: DiatonicSet, b: DiatonicSet) -> bool:
    return is_ms_transition(a.tones, b.tones)


def edge_transitions(a: Triad, b: Triad) -> list[tuple[DiatonicSet, DiatonicSet]]:
    """Maximally smooth scale pairs that carry the chord move a -> b.

    A pair counts once however it is oriented: one scale must hold ``a`` and
    the other ``b``. Returned as (holder of a, holder of b) when possible.
    """
    pairs = {}
    for x, y in itertools.product(scales_containing(a), scales_containing(b)):
        if is_ms_scale_transition(x, y):
            pairs.setdefault(frozenset((x.root, y.root)), (x, y))
    return list(pairs.values())


DOUTHETT_ROOTS = (3, 1, 11, 9, 7, 5)


@dataclass
class DouthettCheck:
    pairs: list[tuple[str, str, bool]]
    root_steps: list[int]

    @property
    def holds(self) -> bool:
        return all(ok for _, _, ok in self.pairs) and all(d == MOD - 2 for d in self.root_steps)


def douthett_sequence_check(cycle: HexCycle | None = None) -> DouthettCheck:
    """Eb-, Db-, B-, A-, G-, F-major against Eb, eb, B, b, G, g."""
    cycle = cycle or hex_cycle(0)
    scales = [DiatonicSet(r) for r in DOUTHETT_ROOTS]
    pairs = [(t.name, s.name, t in s) for t, s in zip(cycle.triads, scales)]
    steps = [(b.root - a.root) % MOD for a, b in zip(scales, scales[1:])]
    return DouthettCheck(pairs, steps)


@dataclass(frozen=True)
class ScaleChain:
    scales: tuple[DiatonicSet, ...]
    triads: tuple[Triad, ...]

    def roots(self) -> tuple[int, ...]:
        return tuple(s.root for s in self.scales)

    def __str__(self) -> str:
        return "-".join(PC_NAMES[s.root] for s in self.scales)


def covering_chains(cycle: HexCycle, chain_len: int) -> list[ScaleChain]:
    """Chains of distinct major scales, consecutive ones maximally smooth,
    holding ``chain_len`` consecutive chords of the cycle one chord per scale.

    Windows run forward around the cycle and may wrap past its end.
    """
    n = len(cycle.triads)
    if not 2 <= chain_len <= n:
        raise ValueError(f"chain length must be in 2..{n}")
    found = {}
    for start in range(n):
        window = [cycle.triads[(start + j) % n] for j in range(chain_len)]
        options = [scales_containing(t) for t in window]

        def extend(chain):
            j = len(chain)
            if j == chain_len:
                c = ScaleChain(tuple(chain), tuple(window))
                found.setdefault((c.roots(), c.triads), c)
                return
            for s in options[j]:
                if s in chain:
                    continue
                if chain and not is_ms_scale_transition(chain[-1], s):
                    continue
                extend(chain + [s])

        extend([])
    return sorted(found.values(), key=lambda c: (c.roots(), [t.index for t in c.triads]))


def containing_scale_exists(cycle: HexCycle) -> bool:
    """True if one major scale holds every chord of the cycle."""
    return any(all(t in s for t in cycle.triads) for s in all_scales())


def containment_table(cycle: HexCycle) -> list[dict]:
    """Per chord: the scales containing it, with the ones that take part in
    the cycle's P-moves flagged."""
    tri = cycle.triads
    n = len(tri)
    marked: set[tuple[int, int]] = set()
    for j in range(n):
        a, b = tri[j], tri[(j + 1) % n]
        if a.is_major and not b.is_major:
            for x, y in edge_transitions(a, b):
                marked.add((j, x.root))
                marked.add(((j + 1) % n, y.root))
    rows = []
    for j, t in enumerate(tri):
        rows.append(
            {
                "triad": t.name,
                "scales": [s.name for s in scales_containing(t)],
                "p_move": [s.name for s in scales_containing(t) if (j, s.root) in marked],
            }
        )
    return rows
