"""Maximally smooth cycles over T/I set classes of Z12.

A transition between two equal-size pitch-class sets is maximally smooth
when all tones but one are held and that one moves by a semitone. A cycle
has more than three distinct chords, all from one set class.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass
from functools import cache
from typing import Iterable

from .pitchspace import MOD, all_ti_ops, apply_to_pcset, pcset

MIN_CYCLE_LENGTH = 4


def _key(s: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


@dataclass(frozen=True, order=True)
class SetClass:
    cardinality: int
    prime: tuple[int, ...]

    @property
    def pcs(self) -> frozenset[int]:
        return frozenset(self.prime)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.prime)) + "}"


def set_class_of(s: Iterable[int]) -> SetClass:
    """Class under all 24 T/I ops, represented by the least image as a sorted tuple."""
    s = pcset(s)
    prime = min(_key(apply_to_pcset(op, s)) for op in all_ti_ops())
    return SetClass(len(prime), prime)


@cache
def all_set_classes() -> tuple[SetClass, ...]:
    seen: set[frozenset[int]] = set()
    out = []
    for k in range(MOD + 1):
        for combo in itertools.combinations(range(MOD), k):
            s = frozenset(combo)
            if s in seen:
                continue
            images = {apply_to_pcset(op, s) for op in all_ti_ops()}
            seen |= images
            out.append(SetClass(k, min(map(_key, images))))
    return tuple(sorted(out))


def exemplars(c: SetClass) -> list[frozenset[int]]:
    """The distinct T/I images of the class, sorted as tuples."""
    return sorted({apply_to_pcset(op, c.pcs) for op in all_ti_ops()}, key=_key)


def is_ms_transition(a: Iterable[int], b: Iterable[int]) -> bool:
    a, b = pcset(a), pcset(b)
    if len(a) != len(b):
        return False
    gone, new = a - b, b - a
    if len(gone) != 1:
        return False
    (x,), (y,) = gone, new
    return (y - x) % MOD in (1, MOD - 1)


def ms_graph(c: SetClass) -> dict[frozenset[int], list[frozenset[int]]]:
    """Adjacency lists of the maximal-smoothness graph on the class's exemplars."""
    nodes = exemplars(c)
    adj = {s: [] for s in nodes}
    for a, b in itertools.combinations(nodes, 2):
        if is_ms_transition(a, b):
            adj[a].append(b)
            adj[b].append(a)
    return adj


@dataclass(frozen=True)
class MsCycle:
    """``chords`` repeats its first chord at the end."""

    chords: tuple[frozenset[int], ...]
    reverse_valid: bool = True

    @property
    def length(self) -> int:
        return len(self.chords) - 1

    @property
    def distinct(self) -> tuple[frozenset[int], ...]:
        return self.chords[:-1]

    def is_valid(self) -> bool:
        inner = self.distinct
        return (
            self.chords[0] == self.chords[-1]
            and len(set(inner)) == len(inner)
            and len(inner) >= MIN_CYCLE_LENGTH
            and len({set_class_of(s) for s in inner}) == 1
            and all(is_ms_transition(a, b) for a, b in zip(self.chords, self.chords[1:]))
        )

    def as_lists(self) -> list[list[int]]:
        return [list(_key(s)) for s in self.chords]


def _canonical(path: list[frozenset[int]]) -> tuple[frozenset[int], ...]:
    keys = [_key(s) for s in path]
    n = len(path)
    best = None
    for start in range(n):
        for step in (1, -1):
            seq = tuple(keys[(start + step * j) % n] for j in range(n))
            if best is None or seq < best[0]:
                best = (seq, start, step)
    _, start, step = best
    return tuple(path[(start + step * j) % n] for j in range(n))


def enumerate_ms_cycles(c: SetClass) -> list[MsCycle]:
    """Every simple cycle of length >= 4 in the class's graph, once each.

    Cycles are reported up to rotation and reversal, starting at their least
    chord and heading toward the lesser of its two neighbours.
    """
    adj = ms_graph(c)
    order = {s: i for i, s in enumerate(adj)}
    found = []

    def extend(path: list, on_path: set):
        head = path[-1]
        for nxt in adj[head]:
            if nxt == path[0]:
                # each cycle is seen twice, once per direction
                if len(path) >= MIN_CYCLE_LENGTH and order[path[1]] < order[path[-1]]:
                    found.append(list(path))
            elif order[nxt] > order[path[0]] and nxt not in on_path:
                path.append(nxt)
                on_path.add(nxt)
                extend(path, on_path)
                on_path.discard(nxt)
                path.pop()

    for s in adj:
        extend([s], {s})

    cycles = []
    for path in found:
        chords = _canonical(path)
        rev = (chords[0],) + tuple(reversed(chords[1:])) + (chords[0],)
        reverse_valid = all(is_ms_transition(a, b) for a, b in zip(rev, rev[1:]))
        cycles.append(MsCycle(chords + chords[:1], reverse_valid))
    return sorted(cycles, key=lambda m: [_key(s) for s in m.chords])


@dataclass(frozen=True)
class ClassSummary:
    set_class: SetClass
    exemplar_count: int
    cycles: tuple[MsCycle, ...]

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def cycle_lengths(self) -> list[int]:
        return sorted(m.length for m in self.cycles)

    def row(self) -> dict:
        return {
            "prime": list(self.set_class.prime),
            "cardinality": self.set_class.cardinality,
            "exemplars": self.exemplar_count,
            "cycles": self.cycle_count,
            "cycle_lengths": self.cycle_lengths,
        }


def summarize(c: SetClass) -> ClassSummary:
    return ClassSummary(c, len(exemplars(c)), tuple(enumerate_ms_cycles(c)))


def classify_all(cardinality: int | None = None) -> list[ClassSummary]:
    """Set classes of cardinality 1..11 that support at least one cycle."""
    out = []
    for c in all_set_classes():
        if not 1 <= c.cardinality <= MOD - 1:
            continue
        if cardinality is not None and c.cardinality != cardinality:
            continue
        summary = summarize(c)
        if summary.cycle_count:
            out.append(summary)
    return out


def to_csv(summaries: Iterable[ClassSummary]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["prime", "cardinality", "exemplars", "cycles", "cycle_lengths"])
    for s in summaries:
        r = s.row()
        w.writerow(
            [
                " ".join(map(str, r["prime"])),
                r["cardinality"],
                r["exemplars"],
                r["cycles"],
                " ".join(map(str, r["cycle_lengths"])),
            ]
        )
    return buf.getvalue()


def to_json(summaries: Iterable[ClassSummary]) -> str:
    return json.dumps([s.row() for s in summaries], indent=2)
