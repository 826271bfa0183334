"""Hexatonic cycles, the PL-group and its T/I dual.

The T/I-group, PL-group and PLR-group are realised as permutation groups on
the 24 triads (in :func:`~hexdual.triads.all_triads` order). The set-wise
T/I stabilizer of a hexatonic set is searched for, not transcribed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from . import groups
from .groups import Carrier, Permutation, PermGroup
from .pitchspace import TiOp, all_ti_ops, pcset
from .triads import TRANSFORMS, Triad, all_triads, apply_ti, as_triad, major, minor

HEX_PCS = pcset({2, 3, 6, 7, 10, 11})

# Eb, eb, B, b, G, g, Eb: alternate P and L starting from Eb.
_CYCLE0 = (major(3), minor(3), major(11), minor(11), major(7), minor(7))


@cache
def triad_carrier() -> Carrier:
    return Carrier(all_triads())


def triad_permutation(f, label: str | None = None) -> Permutation:
    return Permutation.from_function(triad_carrier(), f, label)


@cache
def ti_permutations() -> dict[TiOp, Permutation]:
    return {
        op: triad_permutation(lambda t, op=op: apply_ti(op, t), op.name) for op in all_ti_ops()
    }


def ti_name(p: Permutation) -> str:
    """Name a triad permutation as a T/I operation, e.g. ``"T4"``."""
    for op, q in ti_permutations().items():
        if q == p:
            return op.name
    raise ValueError("permutation is not a transposition or inversion")


@cache
def ti_group() -> PermGroup:
    perms = list(ti_permutations().values())
    return PermGroup(triad_carrier(), perms, [ti_permutations()[TiOp("T", 1)], ti_permutations()[TiOp("I", 0)]])


def transform_permutation(letter: str) -> Permutation:
    return triad_permutation(TRANSFORMS[letter], letter)


@cache
def pl_group() -> PermGroup:
    return groups.generate(triad_carrier(), [transform_permutation("P"), transform_permutation("L")])


@cache
def plr_group() -> PermGroup:
    return groups.generate(
        triad_carrier(), [transform_permutation(x) for x in "PLR"]
    )


@dataclass(frozen=True)
class HexCycle:
    """Seven chords, first equal to last, alternating P and L from a major triad."""

    index: int
    chords: tuple[Triad, ...]

    @property
    def triads(self) -> tuple[Triad, ...]:
        return self.chords[:-1]

    @property
    def pcs(self) -> frozenset[int]:
        return frozenset().union(*(t.pcs for t in self.triads))

    def names(self) -> list[str]:
        return [t.name for t in self.chords]


def hex_cycle(i: int) -> HexCycle:
    """Cycle ``i`` in 0..3: T_i applied to Eb, eb, B, b, G, g, Eb."""
    if not 0 <= i <= 3:
        raise ValueError(f"hexatonic cycle index must be in 0..3, got {i}")
    op = TiOp("T", i)
    chords = tuple(apply_ti(op, t) for t in _CYCLE0)
    return HexCycle(i, chords + chords[:1])


def hex_set(i: int = 0) -> list[Triad]:
    """The six chords of cycle ``i`` in carrier order."""
    return sorted(hex_cycle(i).triads, key=lambda t: t.index)


def triads_within(pcs) -> list[Triad]:
    pcs = pcset(pcs)
    return [t for t in all_triads() if t.pcs <= pcs]


def hex_ti_stabilizer() -> PermGroup:
    """H: the T/I elements that map the Eb hexatonic set onto itself."""
    return groups.setwise_stabilizer(ti_group(), hex_set(0))


def group_names(g: PermGroup) -> list[str]:
    """T/I names of a group's elements, T's then I's, each by index."""
    names = [ti_name(p) for p in g]
    return sorted(names, key=lambda s: (s[0] != "T", int(s[1:])))


def eval_word(word: str, t) -> Triad:
    """Apply a word over {P, L, R} right to left: ``"PLP"`` is P(L(P(t)))."""
    t = as_triad(t)
    for letter in reversed(word):
        if letter not in TRANSFORMS:
            raise ValueError(f"unknown transformation {letter!r} in {word!r}")
        t = TRANSFORMS[letter](t)
    return t


CANONICAL_WORDS = ("", "P", "LP", "PLP", "LPLP", "PLPLP")

# Normal form s^k t^f with s = LP (order 3) and t = P; t s t = s^-1.
_NORMAL = {"": (0, 0), "P": (0, 1), "LP": (1, 0), "LPLP": (2, 0), "PLP": (2, 1), "PLPLP": (1, 1)}
_WORD_OF = {v: k for k, v in _NORMAL.items()}
_LETTER = {"P": (0, 1), "L": (1, 1)}


def _mul(a, b):
    k1, f1 = a
    k2, f2 = b
    return ((k1 + (-k2 if f1 else k2)) % 3, f1 ^ f2)


def reduce_word(word: str) -> str:
    """Reduce a word in P and L to one of :data:`CANONICAL_WORDS`.

    Uses P^2 = L^2 = (LP)^3 = Id; e.g. ``"PL"`` reduces to ``"LPLP"`` and
    ``"L"`` to ``"PLPLP"``. The empty string is the identity.
    """
    acc = (0, 0)
    for letter in word:
        if letter not in _LETTER:
            raise ValueError(f"words are over P and L only, got {letter!r}")
        acc = _mul(acc, _LETTER[letter])
    return _WORD_OF[acc]


def alternating_prefixes(start, length: int = 6) -> list[Triad]:
    """start, P(start), LP(start), PLP(start), ... (``length`` + 1 chords)."""
    out = [as_triad(start)]
    for k in range(length):
        out.append(TRANSFORMS["PL"[k % 2]](out[-1]))
    return out


@dataclass
class HexDualityReport:
    pl_order: int
    h_order: int
    h_elements: list[str]
    pl_words: list[str]
    pl_class: str
    h_class: str
    restriction_isomorphic_pl: bool
    restriction_isomorphic_h: bool
    pl_simply_transitive: bool
    h_simply_transitive: bool
    commute: bool
    brute: groups.DualityReport
    point_image: groups.DualityReport
    h_orbit_of_Eb: dict[str, str]
    pl_orbit_of_Eb: list[str]

    @property
    def dual(self) -> bool:
        return (
            self.brute.dual
            and self.point_image.dual
            and self.restriction_isomorphic_pl
            and self.restriction_isomorphic_h
            and self.commute
            and self.pl_class == self.h_class == "Dihedral(6)"
        )


def verify_hexatonic_duality() -> HexDualityReport:
    hexes = hex_set(0)
    pl, h = pl_group(), hex_ti_stabilizer()
    pl_bar, h_bar = groups.restrict(pl, hexes), groups.restrict(h, hexes)
    eb = major(3)
    return HexDualityReport(
        pl_order=pl_bar.order,
        h_order=h_bar.order,
        h_elements=group_names(h),
        pl_words=sorted((p.label for p in pl), key=len),
        pl_class=str(groups.classify(pl_bar)),
        h_class=str(groups.classify(h_bar)),
        restriction_isomorphic_pl=pl_bar.order == pl.order,
        restriction_isomorphic_h=h_bar.order == h.order,
        pl_simply_transitive=groups.is_simply_transitive(pl_bar),
        h_simply_transitive=groups.is_simply_transitive(h_bar),
        commute=groups.commute_elementwise(pl, h),
        brute=groups.verify_dual_pair(pl_bar, h_bar, "brute"),
        point_image=groups.verify_dual_pair(pl_bar, h_bar, "point-image"),
        h_orbit_of_Eb={ti_name(p): p(eb).name for p in h},
        pl_orbit_of_Eb=[t.name for t in alternating_prefixes(eb)],
    )


@dataclass
class SubDualRow:
    k: str
    hex_set: list[Triad]
    dual_group: list[str]
    dual: bool


def sub_dual_table() -> list[SubDualRow]:
    """Rows (k, kHex, kHk^-1) for k = T0..T3, each checked for duality on kHex."""
    h = hex_ti_stabilizer()
    pl = pl_group()
    rows = []
    for n in range(4):
        op = TiOp("T", n)
        k = ti_permutations()[op]
        khex = sorted((k(t) for t in hex_set(0)), key=lambda t: t.index)
        khk = groups.conjugate(h, k)
        report = groups.verify_dual_pair(groups.restrict(pl, khex), groups.restrict(khk, khex))
        rows.append(SubDualRow("Id" if n == 0 else op.name, khex, group_names(khk), report.dual))
    return rows


def _dot(name: str, edges) -> str:
    lines = [f"digraph {name} {{"]
    for a, b, label in edges:
        lines.append(f'  "{a}" -> "{b}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def pl_network_dot(i: int) -> str:
    """DOT digraph of hexatonic cycle ``i`` with each arrow labelled P or L."""
    chords = hex_cycle(i).chords
    edges = []
    for a, b in zip(chords, chords[1:]):
        label = next(x for x in "PL" if TRANSFORMS[x](a) == b)
        edges.append((a.name, b.name, label))
    return _dot(f"hexcycle{i}", edges)


GRAIL_PATH = (("PLP", major(3)), ("L", minor(11)), ("PLP", major(7)))


def grail_network() -> list[tuple[str, str, str]]:
    """Eb -PLP-> b -L-> G -PLP-> eb, plus the composite arrow Eb -> eb.

    Targets are computed, and the composite label is the reduced word of the
    three arrows composed.
    """
    edges = []
    t = GRAIL_PATH[0][1]
    start = t
    composite = ""
    for word, src in GRAIL_PATH:
        if src != t:
            raise AssertionError(f"grail path broken at {src.name}")
        t = eval_word(word, t)
        edges.append((src.name, t.name, word))
        composite = word + composite
    edges.append((start.name, t.name, reduce_word(composite)))
    return edges


def grail_dot() -> str:
    return _dot("grail", grail_network())
