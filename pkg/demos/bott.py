"""
Demazure characters and Bott's theorem
======================================

"""

from schubaut import build_root_system, longest_element
from schubaut.demazure import bott_cohomology_full_flag, demazure_character, weyl_dimension

b2 = build_root_system("B", 2)
w0 = longest_element(b2)
lam = b2.to_simple([1, 1])
chi = demazure_character(w0, lam)
print("B2, lambda = w1 + w2: dim", chi.mass(), "Weyl formula", weyl_dimension(b2, lam))

# a few line bundles on G/B for A2
a2 = build_root_system("A", 2)
for coords in [(2, 0), (-1, 3), (-3, 0), (-2, -2)]:
    H = bott_cohomology_full_flag(a2, a2.to_simple(coords))
    if not H:
        print(coords, "all cohomology vanishes")
    for deg, c in H.items():
        print(coords, f"H^{deg} has dimension {c.mass()}")
