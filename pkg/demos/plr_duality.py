"""T/I and PLR on all 24 triads: each group is the other's centralizer.

The point-image centralizer keeps this instant; brute force over 24! would not.
"""

from hexdual import groups
from hexdual.hexatonic import plr_group, ti_group, transform_permutation, ti_permutations

ti, plr = ti_group(), plr_group()
print("T/I order", ti.order, "| PLR order", plr.order)

commutes = all(
    transform_permutation(x).commutes_with(g) for x in "PLR" for g in ti_permutations().values()
)
print("P, L, R commute with every T/I op:", commutes)

print("C(T/I) == PLR:", groups.centralizer_of_transitive(ti) == plr)
print("C(PLR) == T/I:", groups.centralizer_of_transitive(plr) == ti)
print("both are", groups.classify(ti), "and", groups.classify(plr))
