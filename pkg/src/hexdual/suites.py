"""Verification suites: each claim recomputes a result and compares it with
the published value carried alongside it."""

from __future__ import annotations

import itertools

from . import diatonic, groups, hexatonic, smoothness
from .hexatonic import hex_cycle, hex_set, pl_group, plr_group, ti_group
from .pitchspace import all_ti_ops
from .report import VerificationReport
from .triads import P, L, R, all_triads, apply_ti, parse_triad, triad_from_pcs

SUITES = ("all", "duality", "plr", "orbit-stabilizer", "table2", "diatonic", "cohn")

H_ELEMENTS = ["T0", "T4", "T8", "I1", "I5", "I9"]
H_ORBIT_OF_EB = {"T0": "Eb", "T4": "G", "T8": "B", "I1": "eb", "I5": "g", "I9": "b"}
CYCLE_EB = ["Eb", "eb", "B", "b", "G", "g", "Eb"]

TABLE2 = [
    ("Id", {"Eb", "eb", "B", "b", "G", "g"}, {"T0", "T4", "T8", "I1", "I5", "I9"}),
    ("T1", {"E", "e", "C", "c", "Ab", "ab"}, {"T0", "T4", "T8", "I3", "I7", "I11"}),
    ("T2", {"F", "f", "C#", "c#", "A", "a"}, {"T0", "T4", "T8", "I5", "I9", "I1"}),
    ("T3", {"F#", "f#", "D", "d", "Bb", "bb"}, {"T0", "T4", "T8", "I7", "I11", "I3"}),
]

# Containing major scales per chord of the Eb cycle, in degree order.
SCALE_TABLE = {
    "Eb": ["Eb", "Bb", "Ab"],
    "eb": ["Gb", "Db", "B"],
    "B": ["B", "F#", "E"],
    "b": ["D", "A", "G"],
    "G": ["G", "D", "C"],
    "g": ["Bb", "F", "Eb"],
}
DOUTHETT = ["Eb", "Db", "B", "A", "G", "F"]
CHAINS = [["B", "E", "A", "D"], ["G", "C", "F", "Bb"], ["Eb", "Ab", "Db", "F#"]]

COHN_HEX_SETS = [
    {"Eb", "eb", "B", "b", "G", "g"},
    {"E", "e", "C", "c", "Ab", "ab"},
    {"F", "f", "C#", "c#", "A", "a"},
    {"F#", "f#", "D", "d", "Bb", "bb"},
]


def _names(xs) -> set[str]:
    return {parse_triad(x).name for x in xs}


def _roots(names) -> list[int]:
    return [parse_triad(n).root for n in names]


def duality_suite() -> VerificationReport:
    rep = VerificationReport("duality")
    triads = all_triads()

    arrows = [(a, b) for a, b in zip(CYCLE_EB, CYCLE_EB[1:])]
    moves = []
    for k, (a, b) in enumerate(arrows):
        f = P if k % 2 == 0 else L
        moves.append([a, "PL"[k % 2], f(parse_triad(a)).name, b])
    rep.add(
        "pl-network",
        "Eb -P-> eb -L-> B -P-> b -L-> G -P-> g -L-> Eb",
        all(got == want for _, _, got, want in moves),
        moves,
    )
    rep.add(
        "involutions",
        "P, L and R are involutions on the 24 consonant triads",
        all(f(f(t)) == t for f in (P, L, R) for t in triads),
    )
    failures = [
        [name, op.name]
        for name, f in (("P", P), ("L", L), ("R", R))
        for op in all_ti_ops()
        for t in triads
        if f(apply_ti(op, t)) != apply_ti(op, f(t))
    ]
    rep.add("pl-commute-ti", "P and L (and R) commute with every T_n and I_n", not failures, failures)

    within = [t.name for t in hexatonic.triads_within(hexatonic.HEX_PCS)]
    rep.add(
        "triads-within-hex",
        "the only consonant triads inside {2,3,6,7,10,11} are Eb, eb, B, b, G, g",
        set(within) == set(CYCLE_EB),
        within,
    )

    h = hexatonic.hex_ti_stabilizer()
    names = hexatonic.group_names(h)
    rep.add(
        "h-stabilizer",
        "the T/I elements preserving Hex as a set are T0, T4, T8, I1, I5, I9",
        names == H_ELEMENTS,
        names,
    )
    rep.add("h-dihedral", "H is dihedral of order 6", str(groups.classify(h)) == "Dihedral(6)", str(groups.classify(h)))
    eb = parse_triad("Eb")
    orbit = {hexatonic.ti_name(p): p(eb).name for p in h}
    rep.add("h-orbit-of-eb", "H sends Eb to each chord of Hex exactly once", orbit == H_ORBIT_OF_EB, orbit)
    hexes = hex_set(0)
    h_bar = groups.restrict(h, hexes)
    rep.add("h-simply-transitive", "H acts simply transitively on Hex", groups.is_simply_transitive(h_bar))

    pl = pl_group()
    funcs = {w: tuple(hexatonic.eval_word(w, t) for t in triads) for w in hexatonic.CANONICAL_WORDS}
    elems = {tuple(p(t) for t in triads) for p in pl}
    rep.add(
        "pl-six-words",
        "<P,L> = {Id, P, LP, PLP, LPLP, PLPLP}",
        pl.order == 6 and set(funcs.values()) == elems and len(set(funcs.values())) == 6,
        sorted(p.label for p in pl),
    )
    rep.add(
        "lp-cubed",
        "(LP)^3 = Id on all 24 triads",
        all(hexatonic.eval_word("LPLPLP", t) == t for t in triads),
    )
    pl_class = str(groups.classify(pl))
    rep.add(
        "pl-dihedral",
        "the PL-group is non-commutative and dihedral of order 6",
        not pl.is_abelian() and pl_class == "Dihedral(6)",
        pl_class,
    )
    pl_bar = groups.restrict(pl, hexes)
    rep.add("pl-simply-transitive", "the PL-group acts simply transitively on Hex", groups.is_simply_transitive(pl_bar))
    rep.add(
        "restriction-iso",
        "restriction to a simply transitive orbit is an isomorphism",
        pl_bar.order == pl.order and h_bar.order == h.order,
        [pl_bar.order, h_bar.order],
    )

    r = hexatonic.verify_hexatonic_duality()
    rep.add(
        "hexatonic-duality",
        "the restrictions of the PL-group and H to Hex are dual groups, both dihedral of order 6",
        r.dual,
        {
            "pl": r.pl_class,
            "h": r.h_class,
            "brute": r.brute.dual,
            "point_image": r.point_image.dual,
        },
    )

    grail = hexatonic.grail_network()
    want = [["Eb", "b", "PLP"], ["b", "G", "L"], ["G", "eb", "PLP"], ["Eb", "eb", "P"]]
    rep.add(
        "grail-network",
        "Eb -PLP-> b -L-> G -PLP-> eb, and the composite is P",
        [list(e) for e in grail] == want,
        [list(e) for e in grail],
    )
    return rep


def plr_suite() -> VerificationReport:
    rep = VerificationReport("plr")
    ti, plr = ti_group(), plr_group()
    rep.add("plr-order", "the PLR-group has 24 elements", plr.order == 24, plr.order)
    c_ti = groups.centralizer_of_transitive(ti)
    rep.add("plr-is-centralizer", "the PLR-group is the centralizer of T/I", c_ti == plr, c_ti.order)
    c_plr = groups.centralizer_of_transitive(plr)
    rep.add("ti-is-centralizer", "T/I is the centralizer of the PLR-group", c_plr == ti, c_plr.order)
    d = groups.verify_dual_pair(ti, plr, "point-image")
    rep.add("ti-plr-dual", "T/I and PLR are dual groups on the consonant triads", d.dual)
    return rep


def orbit_stabilizer_suite() -> VerificationReport:
    rep = VerificationReport("orbit-stabilizer")
    hexes = hex_set(0)
    h, pl = hexatonic.hex_ti_stabilizer(), pl_group()
    named = {"T/I": ti_group(), "PL": pl, "PLR": plr_group(), "H": h}
    bad = [[n, t.name] for n, g in named.items() for t in all_triads() if not groups.check_orbit_stabilizer(g, t)]
    rep.add("orbit-stabilizer", "|G| / |G_Y| = |orbit of Y|, via the bijection gG_Y -> gY", not bad, bad)

    checks = []
    for name, g in named.items():
        for sub in (list(g.carrier), hexes):
            try:
                gg = groups.restrict(g, sub)
            except ValueError:
                continue
            a = groups.is_transitive(gg)
            b = groups.stabilizers_trivial(gg)
            c = gg.order == len(gg.carrier)
            st = groups.is_simply_transitive_by_definition(gg)
            checks.append([name, len(sub), a, b, c, st, st == (a + b + c >= 2)])
    rep.add(
        "two-of-three",
        "simply transitive iff two of: transitive, trivial stabilizers, |G| = |S|",
        all(row[-1] for row in checks),
        checks,
    )

    subs_ok = []
    for name, g in (("PL", pl), ("H", h)):
        gb = groups.restrict(g, hexes)
        for gens in itertools.chain.from_iterable(itertools.combinations(gb, k) for k in (1, 2)):
            sub = groups.generate(gb.carrier, gens)
            if groups.is_transitive(sub):
                subs_ok.append(sub == gb)
    rep.add(
        "transitive-subgroup",
        "a transitive subgroup of a simply transitive group is the whole group",
        all(subs_ok),
        len(subs_ok),
    )

    pl_bar, h_bar = groups.restrict(pl, hexes), groups.restrict(h, hexes)
    commuting = groups.commute_elementwise(pl_bar, h_bar)
    d = groups.verify_dual_pair(pl_bar, h_bar)
    rep.add(
        "commuting-enough",
        "G simply transitive, H transitive, G and H commuting imply G and H are dual",
        commuting and d.dual,
    )

    claims = {n: groups.verify_dixon_mortimer_claims(g) for n, g in (("PL", pl_bar), ("H", h_bar))}
    rep.add(
        "double-centralizer",
        "for simply transitive G, C(G) is simply transitive and C(C(G)) = G",
        all(c.holds for c in claims.values()),
        {n: c.centralizer_order for n, c in claims.items()},
    )
    return rep


def table2_suite() -> VerificationReport:
    rep = VerificationReport("table2")
    rows = hexatonic.sub_dual_table()
    for row, (k, hexes, dual) in zip(rows, TABLE2):
        got_hex = {t.name for t in row.hex_set}
        ok = row.k == k and got_hex == _names(hexes) and set(row.dual_group) == dual and row.dual
        rep.add(
            f"table2-{k}",
            f"{k}: kHex and kHk^-1 = {{{', '.join(sorted(dual))}}} are dual",
            ok,
            {"hex": sorted(got_hex), "dual_group": row.dual_group, "dual": row.dual},
        )
    return rep


def diatonic_suite() -> VerificationReport:
    rep = VerificationReport("diatonic")
    cycle = hex_cycle(0)
    table = {t.name: [s.root for s in diatonic.scales_containing(t)] for t in cycle.triads}
    want = {k: _roots(v) for k, v in SCALE_TABLE.items()}
    rep.add(
        "scale-table",
        "each hexatonic triad lies in exactly three major scales, as tabulated",
        table == want,
        {k: [diatonic.DiatonicSet(r).name for r in v] for k, v in table.items()},
    )
    d = diatonic.douthett_sequence_check(cycle)
    rep.add(
        "douthett",
        "Eb-, Db-, B-, A-, G-, F-major contain Eb, eb, B, b, G, g and descend by whole steps",
        d.holds and [diatonic.DiatonicSet(r).root for r in diatonic.DOUTHETT_ROOTS] == _roots(DOUTHETT),
        [list(p) for p in d.pairs],
    )
    chains = diatonic.covering_chains(cycle, 4)
    got = sorted(list(c.roots()) for c in chains)
    rep.add(
        "chains",
        "the maximally smooth chains of four scales are B-E-A-D, G-C-F-Bb, Eb-Ab-Db-F#",
        got == sorted(_roots(c) for c in CHAINS),
        [str(c) for c in chains],
    )
    counts = []
    tri = cycle.triads
    for j in range(len(tri)):
        a, b = tri[j], tri[(j + 1) % len(tri)]
        counts.append([a.name, b.name, len(diatonic.edge_transitions(a, b))])
    rep.add(
        "edge-transitions",
        "a P-move lies in one maximally smooth scale transition, an L-move in three",
        all(n == (1 if parse_triad(a).is_major else 3) for a, _, n in counts),
        counts,
    )
    rep.add(
        "no-single-scale",
        "no hexatonic cycle lies in a single diatonic set",
        not any(diatonic.containing_scale_exists(hex_cycle(i)) for i in range(4)),
    )
    return rep


def cohn_suite() -> VerificationReport:
    rep = VerificationReport("cohn")
    summaries = smoothness.classify_all()
    rows = [s.row() for s in summaries]
    rep.add(
        "six-categories",
        "exactly six set classes support maximally smooth cycles",
        [s.set_class.cardinality for s in summaries] == [1, 3, 5, 7, 9, 11],
        [[r["prime"], r["cycle_lengths"]] for r in rows],
    )
    triad_class = next(s for s in summaries if s.set_class.cardinality == 3)
    cycles = [{triad_from_pcs(c).name for c in m.distinct} for m in triad_class.cycles]
    rep.add(
        "hexatonic-cycles",
        "the consonant-triad cycles are the four hexatonic cycles, each of six chords",
        triad_class.set_class == smoothness.set_class_of({0, 4, 7})
        and triad_class.cycle_lengths == [6] * 4
        and sorted(map(sorted, cycles)) == sorted(sorted(_names(s)) for s in COHN_HEX_SETS),
        sorted(map(sorted, cycles)),
    )
    long = {s.set_class.cardinality: s.cycle_lengths for s in summaries if s.set_class.cardinality in (5, 7)}
    rep.add(
        "long-cycles",
        "pentatonic and diatonic sets each support one cycle through all 12 exemplars",
        long == {5: [12], 7: [12]}
        and next(s for s in summaries if s.set_class.cardinality == 7).set_class
        == smoothness.set_class_of({0, 2, 4, 5, 7, 9, 11}),
        {str(k): v for k, v in long.items()},
    )
    return rep


_BUILDERS = {
    "duality": duality_suite,
    "plr": plr_suite,
    "orbit-stabilizer": orbit_stabilizer_suite,
    "table2": table2_suite,
    "diatonic": diatonic_suite,
    "cohn": cohn_suite,
}


def run_suite(name: str) -> VerificationReport:
    if name == "all":
        rep = VerificationReport("all")
        for sub in _BUILDERS.values():
            rep.claims.extend(sub().claims)
        return rep
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
