"""Finite permutation groups on small, explicitly listed carriers.

Permutations are dense index maps over a fixed carrier ordering and compose
right to left: ``(f * g)(x) == f(g(x))``. A word label such as ``"PLP"`` is
therefore read as P(L(P(x))).

Everything here is exhaustive; carriers have at most a few dozen points.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

DEFAULT_MAX_ORDER = 10**6
BRUTE_FORCE_MAX_DEGREE = 8


class Carrier:
    """An ordered list of distinct hashable points."""

    __slots__ = ("points", "_index", "_hash")

    def __init__(self, points: Iterable[Hashable]):
        self.points = tuple(points)
        self._index = {p: i for i, p in enumerate(self.points)}
        if len(self._index) != len(self.points):
            raise ValueError("carrier points must be distinct")
        self._hash = hash(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return point in self._index

    def __getitem__(self, i: int):
        return self.points[i]

    def index(self, point) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise ValueError(f"{point!r} is not in the carrier") from None

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, Carrier) and self.points == other.points

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Carrier({len(self)} points)"


class Permutation:
    __slots__ = ("carrier", "images", "label")

    def __init__(self, carrier: Carrier, images: Sequence[int], label: str | None = None):
        images = tuple(images)
        if sorted(images) != list(range(len(carrier))):
            raise ValueError("images must be a bijection of the carrier indices")
        self.carrier = carrier
        self.images = images
        self.label = label

    @classmethod
    def identity(cls, carrier: Carrier, label: str | None = "") -> Permutation:
        return cls(carrier, range(len(carrier)), label)

    @classmethod
    def from_function(cls, carrier: Carrier, f, label: str | None = None) -> Permutation:
        return cls(carrier, [carrier.index(f(p)) for p in carrier.points], label)

    @classmethod
    def from_mapping(cls, carrier: Carrier, mapping: dict, label: str | None = None) -> Permutation:
        return cls(carrier, [carrier.index(mapping.get(p, p)) for p in carrier.points], label)

    def __call__(self, point):
        return self.carrier.points[self.images[self.carrier.index(point)]]

    def _check(self, other: Permutation):
        if self.carrier is not other.carrier and self.carrier != other.carrier:
            raise ValueError("permutations act on different carriers")

    def __mul__(self, other: Permutation) -> Permutation:
        self._check(other)
        mine = self.images
        p = Permutation.__new__(Permutation)
        p.carrier = self.carrier
        p.images = tuple([mine[i] for i in other.images])
        p.label = None
        return p

    @property
    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(self.carrier, inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        n = 1
        seen = [False] * len(self.images)
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length, i = 0, start
            while not seen[i]:
                seen[i] = True
                i = self.images[i]
                length += 1
            n = math.lcm(n, length)
        return n

    def commutes_with(self, other: Permutation) -> bool:
        a, b = self.images, other.images
        return all(a[b[i]] == b[a[i]] for i in range(len(a)))

    def with_label(self, label: str | None) -> Permutation:
        return Permutation(self.carrier, self.images, label)

    def cycles(self) -> list[tuple]:
        """Non-trivial cycles, as tuples of carrier points."""
        out, seen = [], set()
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(self.carrier.points[i])
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images and (
            self.carrier is other.carrier or self.carrier == other.carrier
        )

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        if self.label is not None:
            return f"Permutation({self.label or 'Id'})"
        return f"Permutation({list(self.images)})"


def _closure(identity: Permutation, gens: Sequence[Permutation], max_order: int) -> dict:
    """Breadth-first closure; maps each element to its first-found (shortest) word."""
    found = {identity: identity}
    frontier = deque([identity])
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = g * x
            if y not in found:
                label = None
                if g.label is not None and found[x].label is not None:
                    label = g.label + found[x].label
                found[y] = y.with_label(label) if label is not None else y
                if len(found) > max_order:
                    raise OverflowError(f"group order exceeds {max_order}")
                frontier.append(y)
    return found


class PermGroup:
    """A finite subgroup of Sym(carrier).

    The element set is checked against the closure of the generators at
    construction; elements are stored sorted by their image arrays.
    """

    def __init__(
        self,
        carrier: Carrier,
        elements: Iterable[Permutation],
        generators: Iterable[Permutation] | None = None,
    ):
        elements = list(elements)
        gens = list(generators) if generators is not None else list(elements)
        for p in itertools.chain(elements, gens):
            if p.carrier != carrier:
                raise ValueError("element on a foreign carrier")
        try:
            closure = _closure(Permutation.identity(carrier), gens, len(elements))
        except OverflowError:
            closure = None
        if closure is None or set(closure) != set(elements):
            raise ValueError("elements are not the group generated by the generators")
        self.carrier = carrier
        self.generators = tuple(gens)
        self._elements = tuple(sorted(elements, key=lambda p: p.images))
        self._lookup = {p: p for p in self._elements}

    @classmethod
    def _trusted(cls, carrier, elements, generators) -> PermGroup:
        g = cls.__new__(cls)
        g.carrier = carrier
        g.generators = tuple(generators)
        g._elements = tuple(sorted(elements, key=lambda p: p.images))
        g._lookup = {p: p for p in g._elements}
        return g

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return self._elements

    @property
    def order(self) -> int:
        return len(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._lookup

    def labelled(self, p: Permutation) -> Permutation:
        """The stored copy of ``p`` (which carries this group's label)."""
        return self._lookup[p]

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a.commutes_with(b) for a, b in itertools.combinations(gens, 2))

    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self._elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.carrier == other.carrier and self.element_set() == other.element_set()

    def __hash__(self) -> int:
        return hash(self.element_set())

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order}, degree={len(self.carrier)})"


def generate(
    carrier: Carrier, gens: Iterable[Permutation], max_order: int = DEFAULT_MAX_ORDER
) -> PermGroup:
    """The subgroup generated by ``gens``.

    Each element is labelled with a shortest word in the generator labels
    (the identity gets the empty word) when every generator has a label.
    """
    gens = list(gens)
    for g in gens:
        if g.carrier != carrier:
            raise ValueError("generator on a foreign carrier")
    found = _closure(Permutation.identity(carrier), gens, max_order)
    return PermGroup._trusted(carrier, found.values(), gens)


def trivial_group(carrier: Carrier) -> PermGroup:
    return generate(carrier, [])


def symmetric_group(carrier: Carrier) -> PermGroup:
    n = len(carrier)
    if n > BRUTE_FORCE_MAX_DEGREE:
        raise ValueError(f"refusing to list Sym({n})")
    elements = [Permutation(carrier, p) for p in itertools.permutations(range(n))]
    gens = []
    if n >= 2:
        gens.append(Permutation(carrier, [1, 0] + list(range(2, n))))
        gens.append(Permutation(carrier, list(range(1, n)) + [0]))
    return PermGroup._trusted(carrier, elements, gens)


def orbit(g: PermGroup, point) -> list:
    """Orbit of ``point``, sorted by carrier index."""
    start = g.carrier.index(point)
    seen = {start}
    todo = [start]
    while todo:
        i = todo.pop()
        for gen in g.generators:
            j = gen.images[i]
            if j not in seen:
                seen.add(j)
                todo.append(j)
    return [g.carrier.points[i] for i in sorted(seen)]


def orbits(g: PermGroup) -> list[list]:
    out, covered = [], set()
    for p in g.carrier.points:
        if p not in covered:
            o = orbit(g, p)
            covered.update(o)
            out.append(o)
    return out


def stabilizer(g: PermGroup, point) -> PermGroup:
    i = g.carrier.index(point)
    fixing = [p for p in g if p.images[i] == i]
    return PermGroup._trusted(g.carrier, fixing, fixing)


def setwise_stabilizer(g: PermGroup, subset: Iterable) -> PermGroup:
    idx = {g.carrier.index(p) for p in subset}
    keeping = [p for p in g if all(p.images[i] in idx for i in idx)]
    return PermGroup._trusted(g.carrier, keeping, keeping)


def is_transitive(g: PermGroup) -> bool:
    if len(g.carrier) == 0:
        return True
    return len(orbit(g, g.carrier.points[0])) == len(g.carrier)


def stabilizers_trivial(g: PermGroup) -> bool:
    return all(stabilizer(g, p).order == 1 for p in g.carrier)


def is_simply_transitive(g: PermGroup) -> bool:
    """Transitive with |G| = |S| (any two of transitive, free, |G|=|S| suffice)."""
    return is_transitive(g) and g.order == len(g.carrier)


def is_simply_transitive_by_definition(g: PermGroup) -> bool:
    """For every pair (Y, Z) exactly one element sends Y to Z."""
    n = len(g.carrier)
    counts = [[0] * n for _ in range(n)]
    for p in g:
        for i, j in enumerate(p.images):
            counts[i][j] += 1
    return all(c == 1 for row in counts for c in row)


def centralizer_brute(g: PermGroup, max_degree: int = BRUTE_FORCE_MAX_DEGREE) -> PermGroup:
    """Centralizer of ``g`` in Sym(carrier), by scanning every permutation."""
    n = len(g.carrier)
    if n > max_degree:
        raise ValueError(f"brute-force centralizer limited to {max_degree} points, got {n}")
    gens = [p.images for p in g.generators]
    found = []
    for cand in itertools.permutations(range(n)):
        if all(all(cand[a[i]] == a[cand[i]] for i in range(n)) for a in gens):
            found.append(Permutation(g.carrier, cand))
    return PermGroup._trusted(g.carrier, found, found)


def centralizer_of_transitive(g: PermGroup) -> PermGroup:
    """Centralizer of a transitive group, determined by point images.

    A centralizing sigma is fixed by sigma(s0) = t: it must send g(s0) to g(t)
    for every g. Each candidate t is accepted iff that rule is consistent.
    """
    if not is_transitive(g):
        raise ValueError("point-image centralizer needs a transitive group")
    n = len(g.carrier)
    if n == 0:
        return trivial_group(g.carrier)
    s0 = 0
    found = []
    for t in range(n):
        sigma = [-1] * n
        ok = True
        for p in g:
            src, dst = p.images[s0], p.images[t]
            if sigma[src] == -1:
                sigma[src] = dst
            elif sigma[src] != dst:
                ok = False
                break
        if ok and sorted(sigma) == list(range(n)):
            found.append(Permutation(g.carrier, sigma))
    return PermGroup._trusted(g.carrier, found, found)


def centralizer(g: PermGroup) -> PermGroup:
    if is_transitive(g):
        return centralizer_of_transitive(g)
    return centralizer_brute(g)


def restrict(g: PermGroup, sub: Iterable) -> PermGroup:
    """Restriction of ``g`` to an invariant subset, as a group on that subset.

    Distinct elements may collapse; the first (by image order) keeps its label.
    """
    sub = set(sub)
    idx = sorted(g.carrier.index(p) for p in sub)
    new_carrier = Carrier(g.carrier.points[i] for i in idx)
    pos = {old: new for new, old in enumerate(idx)}

    def cut(p: Permutation) -> Permutation:
        try:
            images = [pos[p.images[i]] for i in idx]
        except KeyError:
            raise ValueError("subset is not invariant under the group") from None
        return Permutation(new_carrier, images, p.label)

    elements = {}
    for p in g:
        q = cut(p)
        elements.setdefault(q, q)
    gens = [cut(p) for p in g.generators]
    return PermGroup._trusted(new_carrier, elements.values(), gens)


def conjugate(g: PermGroup, k: Permutation) -> PermGroup:
    """k g k^-1 for every g in the group."""
    kinv = k.inverse
    elements = [k * p * kinv for p in g]
    gens = [k * p * kinv for p in g.generators]
    return PermGroup._trusted(g.carrier, elements, gens)


def is_subgroup(h: PermGroup, g: PermGroup) -> bool:
    return h.carrier == g.carrier and all(p in g for p in h)


def commute_elementwise(g: PermGroup, h: PermGroup) -> bool:
    return all(a.commutes_with(b) for a in g.generators for b in h.generators)


@dataclass(frozen=True)
class GroupClass:
    """Isomorphism type of a small group: ``"Trivial"``, ``"Cyclic"``,
    ``"Dihedral"``, ``"Sym"`` or ``"Other"``.

    ``n`` is the group order, except for ``"Sym"`` where it is the degree.
    """

    kind: str
    n: int

    def __str__(self) -> str:
        return "Trivial" if self.kind == "Trivial" else f"{self.kind}({self.n})"


def _cyclic_subgroup(x: Permutation) -> set:
    out = {Permutation.identity(x.carrier)}
    y = x
    while y not in out:
        out.add(y)
        y = x * y
    return out


def classify(g: PermGroup) -> GroupClass:
    """Recognise trivial, cyclic, dihedral and full symmetric groups.

    Dihedral of order 2m means an element r of order m together with an
    involution s outside <r> with s r s = r^-1; Sym(3) reports as Dihedral(6).
    """
    n = g.order
    if n == 1:
        return GroupClass("Trivial", 1)
    orders = {p: p.order() for p in g}
    if n in orders.values():
        return GroupClass("Cyclic", n)
    if n % 2 == 0:
        m = n // 2
        involutions = [p for p, o in orders.items() if o == 2]
        for r in (p for p, o in orders.items() if o == m):
            rot = _cyclic_subgroup(r)
            rinv = r.inverse
            if any(s not in rot and s * r * s == rinv for s in involutions):
                return GroupClass("Dihedral", n)
    d = len(g.carrier)
    if d >= 4 and n == math.factorial(d):
        return GroupClass("Sym", d)
    return GroupClass("Other", n)


def check_orbit_stabilizer(g: PermGroup, point) -> bool:
    """|G| = |G_Y| * |orbit of Y|, with gG_Y -> gY checked to be a bijection.

    Elements are bucketed by where they send Y; each bucket must be exactly
    one left coset of the stabilizer, and the buckets must cover the orbit.
    """
    i = g.carrier.index(point)
    stab = stabilizer(g, point)
    fibres: dict[int, list[Permutation]] = {}
    for p in g:
        fibres.setdefault(p.images[i], []).append(p)
    orb = {g.carrier.index(q) for q in orbit(g, point)}
    if set(fibres) != orb:
        return False
    for members in fibres.values():
        coset = {members[0] * s for s in stab}
        if coset != set(members):
            return False
    return g.order == stab.order * len(orb)


@dataclass
class DualityReport:
    method: str
    g_simply_transitive: bool
    h_simply_transitive: bool
    g_in_centralizer_of_h: bool
    h_in_centralizer_of_g: bool
    centralizer_of_g_is_h: bool
    centralizer_of_h_is_g: bool

    @property
    def dual(self) -> bool:
        return all(
            (
                self.g_simply_transitive,
                self.h_simply_transitive,
                self.g_in_centralizer_of_h,
                self.h_in_centralizer_of_g,
                self.centralizer_of_g_is_h,
                self.centralizer_of_h_is_g,
            )
        )


def verify_dual_pair(g: PermGroup, h: PermGroup, method: str | None = None) -> DualityReport:
    """Check that ``g`` and ``h`` are dual: each simply transitive, each the
    other's centralizer in Sym(carrier).

    ``method`` is ``"brute"`` (carriers up to 8 points) or ``"point-image"``;
    by default brute force is used whenever it is allowed.
    """
    if g.carrier != h.carrier:
        raise ValueError("groups act on different carriers")
    if method is None:
        method = "brute" if len(g.carrier) <= BRUTE_FORCE_MAX_DEGREE else "point-image"
    if method not in ("brute", "point-image"):
        raise ValueError(f"unknown method {method!r}")

    def cent(x: PermGroup) -> PermGroup | None:
        if method == "brute":
            return centralizer_brute(x)
        return centralizer_of_transitive(x) if is_transitive(x) else None

    cg, ch = cent(g), cent(h)
    return DualityReport(
        method=method,
        g_simply_transitive=is_simply_transitive(g),
        h_simply_transitive=is_simply_transitive(h),
        g_in_centralizer_of_h=ch is not None and is_subgroup(g, ch),
        h_in_centralizer_of_g=cg is not None and is_subgroup(h, cg),
        centralizer_of_g_is_h=cg is not None and cg == h,
        centralizer_of_h_is_g=ch is not None and ch == g,
    )


@dataclass
class CentralizerClaims:
    centralizer_order: int
    centralizer_simply_transitive: bool
    double_centralizer_is_group: bool

    @property
    def holds(self) -> bool:
        return self.centralizer_simply_transitive and self.double_centralizer_is_group


def verify_dixon_mortimer_claims(g: PermGroup) -> CentralizerClaims:
    """For simply transitive G: C(G) is simply transitive and C(C(G)) = G.

    Both centralizers are computed by brute force over Sym(carrier).
    """
    if not is_simply_transitive(g):
        raise ValueError("group must act simply transitively")
    c = centralizer_brute(g)
    cc = centralizer_brute(c)
    return CentralizerClaims(
        centralizer_order=c.order,
        centralizer_simply_transitive=is_simply_transitive(c),
        double_centralizer_is_group=cc == g,
    )
