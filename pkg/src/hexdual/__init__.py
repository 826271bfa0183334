"""Machine-checked hexatonic duality: neo-Riemannian P/L, the T/I group,
centralizers and dual groups, and maximally smooth cycles in Z12."""

from .groups import (
    Carrier,
    GroupClass,
    PermGroup,
    Permutation,
    centralizer_brute,
    centralizer_of_transitive,
    classify,
    generate,
    orbit,
    restrict,
    stabilizer,
    verify_dual_pair,
)
from .hexatonic import (
    eval_word,
    hex_cycle,
    hex_ti_stabilizer,
    pl_group,
    plr_group,
    reduce_word,
    sub_dual_table,
    ti_group,
    verify_hexatonic_duality,
)
from .pitchspace import TiOp, all_ti_ops, invert, transpose
from .triads import L, P, R, Triad, all_triads, major, minor, parse_triad

__version__ = "0.1.0"
