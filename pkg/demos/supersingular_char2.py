"""Twists of the supersingular curve y^2 + y = x^3 in characteristic 2.

Over GF(2) the 24-element automorphism group collapses to just three
twist classes, and the two nontrivial ones only split over GF(2^8).
Point counting separates all three.  Over GF(4) the picture widens to
seven classes.
"""

from twistlab import (
    WeierstrassCurve, automorphism_group, element_to_str, enumerate_twists,
    field_create, group_structure,
)

F2 = field_create(2)
F4 = field_create(2, 2)
E = WeierstrassCurve(F2, 0, 0, 1, 0, 0)
G = automorphism_group(E)
S = group_structure(G)
print(f"curve: {E}")
print(f"automorphism group: order {G.order} over {G.field}, "
      f"center size {len(S.center)}")

report = enumerate_twists(E, F2)
print("\ntwists over GF(2):")
for e in report.entries:
    coeffs = ", ".join(element_to_str(c) for c in e.curve.coefficients)
    print(f"  [{coeffs}]  splitting degree {e.split_degree}, "
          f"{e.point_count} points")

counts = [e.point_count for e in report.entries]
print(f"\nall point counts distinct: {len(set(counts)) == len(counts)}")

report4 = enumerate_twists(E, F4)
degrees = sorted(e.split_degree for e in report4.entries)
print(f"\nover GF(4): {len(report4.entries)} twist classes, "
      f"splitting degrees {degrees}")
quad = next(e for e in report4.entries if e.split_degree == 2)
coeffs = ", ".join(element_to_str(c) for c in quad.curve.coefficients)
print(f"quadratic twist representative: [{coeffs}]")
