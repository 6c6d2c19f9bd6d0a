"""
Root systems and Weyl group words
=================================

"""

from schubaut import WeylWord, build_root_system, longest_element
from schubaut.weyl import coset_factorize, enumerate_min_reps

# G2 with a1 short; weights live in simple-root coordinates
g2 = build_root_system("G", 2)
print(g2.name, "positive roots:", ", ".join(str(b) for b in g2.positive_roots))
print("highest root", g2.highest_root, "rho", g2.rho)

# words act right to left, and compare by their action
w = WeylWord(g2, (1, 2, 1, 2))
print(w, "length", w.length, "sends the highest root to", w.inverse().act(g2.highest_root))
print("s1s2s1s2s1s2 == s2s1s2s1s2s1:", WeylWord(g2, (1, 2) * 3) == WeylWord(g2, (2, 1) * 3))

# longest element and a parabolic factorization w0 = w^J w_J
a3 = build_root_system("A", 3)
w0 = longest_element(a3)
wJ, w_J = coset_factorize(w0, {1, 3})
print("A3: w0 =", w0, "=", wJ, "*", w_J)
print("|W^J| for J = {1,3}:", len(enumerate_min_reps(a3, {1, 3})))
