"""Walk through the twists of y^2 = x^3 - x over GF(3) and GF(9).

The automorphism group here has order 12, so the twist classification
is richer than the generic quadratic-twist-only picture: over GF(3)
there are four twists (one trivial, one quadratic, two cubic), and over
GF(9) six.
"""

from twistlab import (
    WeierstrassCurve, automorphism_group, element_to_str, enumerate_twists,
    field_create, frobenius_action, frobenius_classes, isomorphism_to_str,
)
from twistlab.twists import point_count_table

F3 = field_create(3)
E = WeierstrassCurve(F3, 0, 0, 0, -1, 0)
G = automorphism_group(E)
print(f"curve: {E}")
print(f"automorphism group: order {G.order}, realized over {G.field}")

A = frobenius_action(G, F3)
print(f"\ntwisted conjugacy classes over GF(3) (action order {A.order}):")
for cls in frobenius_classes(A):
    rep = isomorphism_to_str(cls.representative)
    print(f"  size {cls.size}  rep {rep}")

report = enumerate_twists(E, F3)
print("\ntwist representatives over GF(3):")
for e in report.entries:
    coeffs = ", ".join(element_to_str(c) for c in e.curve.coefficients)
    print(f"  [{coeffs}]  splits at degree {e.split_degree}, "
          f"{e.point_count} points")

table = point_count_table(report)
print(f"\npoint counts: {table['counts']}")
print(f"pairs left unseparated by counting points: {table['unseparated']}")

# over GF(9) the Frobenius action becomes trivial and the classes are
# plain conjugacy classes: sizes 1, 1, 2, 2, 3, 3
F9 = field_create(3, 2)
A9 = frobenius_action(G, F9)
sizes = sorted(cls.size for cls in frobenius_classes(A9))
print(f"\nclass sizes over GF(9): {sizes}")
