"""Induced maps from cubic and sextic subgroups into the full twist set.

Restricting the coefficient group changes the classification: a
subgroup H of Aut E has its own twisted classes, and the natural map
into the full classification can both collapse distinct classes onto
one twist and send nontrivial classes to the trivial one.  This demo
measures those failures for the cyclic subgroups of order 3 and 6.
"""

from twistlab import (
    WeierstrassCurve, automorphism_group, capitulation_report, field_create,
    frobenius_action, induced_map, resolve_subgroup,
)
from twistlab.twistcoh import stable_subgroups

# over GF(9) the sextic subgroup classifies 6 twists but two pairs of
# its classes become isomorphic as full twists
F9 = field_create(3, 2)
E = WeierstrassCurve(F9, 0, 0, 0, -1, 0)
G = automorphism_group(E)
A = frobenius_action(G, F9)
for name in ("C3", "C6"):
    H = resolve_subgroup(A, name)
    rep = induced_map(A, H)
    print(f"GF(9), H = {name}: {len(rep.h_classes)} H-classes -> "
          f"{len(rep.g_classes)} full classes, kernel {rep.kernel_size}, "
          f"collisions {len(rep.collisions)}, injective: {rep.is_injective}")

# over GF(2) there are two Frobenius-stable cubic subgroups and neither
# contributes a twist: every nontrivial class would have to capitulate,
# and in fact none even exists at the subgroup level
F2 = field_create(2)
E2 = WeierstrassCurve(F2, 0, 0, 1, 0, 0)
G2 = automorphism_group(E2)
A2 = frobenius_action(G2, F2)
cubics = [H for H in stable_subgroups(A2) if H.order == 3]
print(f"\nGF(2): {len(cubics)} stable cubic subgroups")
for H in cubics:
    rep = capitulation_report(E2, F2, H)
    inner = len(rep.induced.h_classes)
    print(f"  subgroup {H.indices}: {inner} H-class(es), "
          f"capitulating {len(rep.capitulating)}, "
          f"surviving {len(rep.surviving)} -> no cubic twists")
