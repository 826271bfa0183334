"""Pitch classes in Z12 and the twelve-tone operations T_n and I_n.

Pitch classes are plain ints reduced mod 12 (0=C, 1=C#/Db, ..., 11=B) and
pitch-class sets are frozensets of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

MOD = 12

PC_NAMES = ("C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B")

_LETTERS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
_ACCIDENTALS = {"#": 1, "♯": 1, "b": -1, "♭": -1}


def pc(x: int) -> int:
    return x % MOD


def pcset(members: Iterable[int]) -> frozenset[int]:
    return frozenset(x % MOD for x in members)


def parse_pitch_class(name: str) -> int:
    """Parse a letter name such as ``"Eb"``, ``"f#"`` or ``"B♭"``.

    Letter case is ignored here; the triad parser uses it to pick the mode.
    """
    if not name:
        raise ValueError("empty pitch name")
    letter = name[0].upper()
    if letter not in _LETTERS:
        raise ValueError(f"unknown pitch letter in {name!r}")
    value = _LETTERS[letter]
    for ch in name[1:]:
        if ch not in _ACCIDENTALS:
            raise ValueError(f"unknown accidental {ch!r} in {name!r}")
        value += _ACCIDENTALS[ch]
    return value % MOD


def transpose(n: int, x: int) -> int:
    return (x + n) % MOD


def invert(n: int, x: int) -> int:
    return (n - x) % MOD


@dataclass(frozen=True)
class TiOp:
    """A transposition ``T_n`` (kind ``"T"``) or inversion ``I_n`` (kind ``"I"``)."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("T", "I"):
            raise ValueError(f"kind must be 'T' or 'I', got {self.kind!r}")
        object.__setattr__(self, "index", self.index % MOD)

    def __call__(self, x: int) -> int:
        if self.kind == "T":
            return transpose(self.index, x)
        return invert(self.index, x)

    def __mul__(self, other: TiOp) -> TiOp:
        # (self * other)(x) = self(other(x))
        return TiOp.from_function(lambda x: self(other(x)))

    @property
    def inverse(self) -> TiOp:
        if self.kind == "I":
            return self
        return TiOp("T", -self.index)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def from_function(cls, f: Callable[[int], int]) -> TiOp:
        """Recognise a map on Z12 as one of the 24 T/I operations.

        Raises ValueError if ``f`` is not x -> x+n or x -> -x+n.
        """
        values = [f(x) % MOD for x in range(MOD)]
        n = values[0]
        for kind in ("T", "I"):
            op = cls(kind, n)
            if all(op(x) == values[x] for x in range(MOD)):
                return op
        raise ValueError(f"not a transposition or inversion: {values}")

    @classmethod
    def parse(cls, text: str) -> TiOp:
        text = text.strip().replace("_", "")
        if len(text) < 2 or text[0].upper() not in "TI":
            raise ValueError(f"cannot parse T/I operation {text!r}")
        return cls(text[0].upper(), int(text[1:]))


IDENTITY = TiOp("T", 0)


def all_ti_ops() -> list[TiOp]:
    """T_0..T_11 followed by I_0..I_11."""
    return [TiOp("T", n) for n in range(MOD)] + [TiOp("I", n) for n in range(MOD)]


def reflection_interchanging(m: int, n: int) -> TiOp:
    """The unique inversion swapping ``m`` and ``n``: I_{m+n}."""
    return TiOp("I", m + n)


def apply_to_pcset(op: TiOp, s: Iterable[int]) -> frozenset[int]:
    return frozenset(op(x) for x in s)
