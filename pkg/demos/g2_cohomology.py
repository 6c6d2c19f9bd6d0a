"""
H^0(w, g/b) letter by letter
============================

The witness word for (G2, P_a1) is s1 s2 s1 s2.  Peeling letters from the
right grows g/b into all of g.
"""

from schubaut import build_root_system
from schubaut.gmod import equals_adjoint, h0_trace

g2 = build_root_system("G", 2)
for suffix, module in h0_trace(g2, (1, 2, 1, 2)):
    label = " ".join(f"s{i}" for i in suffix) or "id"
    print(f"H^0({label}, g/b): {len(module)} atoms")
    print("   ", ", ".join(str(a) for a in module))

final = h0_trace(g2, (1, 2, 1, 2))[-1][1]
print("equal to g:", bool(equals_adjoint(g2, final)))

# the same check for B_n, where the word is v1 v2 ... v_{n-1}, v_r = s_n ... s_r
from schubaut.pipeline import witness
from schubaut.gmod import h0_word

for n in (3, 4, 5):
    bn = build_root_system("B", n)
    w = witness(bn, {n})
    print(f"B{n}: w = {w}, H^0 = g:", bool(equals_adjoint(bn, h0_word(bn, w))))
