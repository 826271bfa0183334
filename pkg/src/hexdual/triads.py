"""The 24 consonant triads and the transformations acting on them.

A triad is an *ordered* triple: majors are <x, x+4, x+7> and minors are
<x+7, x+3, x>, with ``x`` the root in both cases. P, L and R are defined by
inverting about the sum of two specific components, so the ordering matters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cache
from typing import Iterable

from .pitchspace import MOD, PC_NAMES, TiOp, parse_pitch_class


class Mode(Enum):
    MAJOR = "major"
    MINOR = "minor"


@dataclass(frozen=True)
class Triad:
    tones: tuple[int, int, int]
    mode: Mode = field(init=False, compare=False)

    def __post_init__(self):
        tones = tuple(x % MOD for x in self.tones)
        if len(tones) != 3:
            raise ValueError(f"a triad has three tones, got {self.tones!r}")
        x1, x2, x3 = tones
        steps = ((x2 - x1) % MOD, (x3 - x1) % MOD)
        if steps == (4, 7):
            mode = Mode.MAJOR
        elif steps == (8, 5):
            mode = Mode.MINOR
        else:
            raise ValueError(f"{self.tones!r} is not an ordered consonant triad")
        object.__setattr__(self, "tones", tones)
        object.__setattr__(self, "mode", mode)

    @property
    def root(self) -> int:
        return self.tones[0] if self.mode is Mode.MAJOR else self.tones[2]

    @property
    def is_major(self) -> bool:
        return self.mode is Mode.MAJOR

    @property
    def pcs(self) -> frozenset[int]:
        return frozenset(self.tones)

    @property
    def index(self) -> int:
        """Position in :func:`all_triads`: majors 0..11, minors 12..23, by root."""
        return self.root + (0 if self.is_major else MOD)

    @property
    def name(self) -> str:
        letter = PC_NAMES[self.root]
        return letter if self.is_major else letter.lower()

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Triad({self.name} <{','.join(map(str, self.tones))}>)"


def major(x: int) -> Triad:
    return _interned()[(x % MOD, (x + 4) % MOD, (x + 7) % MOD)]


def minor(x: int) -> Triad:
    return _interned()[((x + 7) % MOD, (x + 3) % MOD, x % MOD)]


@cache
def all_triads() -> tuple[Triad, ...]:
    """C, Db, ..., B, then c, db, ..., b. This order indexes permutation carriers."""
    majors = tuple(Triad((x, x + 4, x + 7)) for x in range(MOD))
    return majors + tuple(Triad((x + 7, x + 3, x)) for x in range(MOD))


@cache
def _interned() -> dict[tuple[int, int, int], Triad]:
    # T/I images of a triad are triads, so transformations can skip validation
    return {t.tones: t for t in all_triads()}


def as_triad(t) -> Triad:
    if isinstance(t, Triad):
        return t
    if isinstance(t, str):
        return parse_triad(t)
    return Triad(tuple(t))


def parse_triad(name: str) -> Triad:
    """Upper-case letter for major, lower-case for minor: ``"Eb"``, ``"f#"``, ``"bb"``."""
    name = name.strip()
    if not name or name[0].upper() not in "ABCDEFG":
        raise ValueError(f"cannot parse triad name {name!r}")
    root = parse_pitch_class(name)
    return major(root) if name[0].isupper() else minor(root)


def triad_from_pcs(pcs: Iterable[int]) -> Triad:
    """The consonant triad with the given (unordered) tone content."""
    s = frozenset(x % MOD for x in pcs)
    for t in all_triads():
        if t.pcs == s:
            return t
    raise ValueError(f"{sorted(s)} is not a consonant triad")


def apply_ti(op: TiOp, t) -> Triad:
    t = as_triad(t)
    return _interned()[tuple(op(x) for x in t.tones)]


def _invert_about(t: Triad, i: int, j: int) -> Triad:
    n = t.tones[i] + t.tones[j]
    return _interned()[tuple((n - x) % MOD for x in t.tones)]


def P(t) -> Triad:
    """Parallel: I_{x1+x3} componentwise."""
    return _invert_about(as_triad(t), 0, 2)


def L(t) -> Triad:
    """Leading-tone exchange: I_{x2+x3} componentwise."""
    return _invert_about(as_triad(t), 1, 2)


def R(t) -> Triad:
    """Relative: I_{x1+x2} componentwise."""
    return _invert_about(as_triad(t), 0, 1)


TRANSFORMS = {"P": P, "L": L, "R": R}


def common_tones(a: Triad, b: Triad) -> frozenset[int]:
    return a.pcs & b.pcs


def voice_motion(a: Triad, b: Triad) -> int | None:
    """Signed semitone motion (-5..6) of the single moving tone, or None.

    None when the triads do not share exactly two tones.
    """
    if len(common_tones(a, b)) != 2:
        return None
    (x,) = a.pcs - b.pcs
    (y,) = b.pcs - a.pcs
    d = (y - x) % MOD
    return d - MOD if d > MOD // 2 else d
