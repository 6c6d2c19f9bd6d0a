"""
Witnesses for every parabolic
=============================

For each proper parabolic P_I the witness w has stabilizer P_I and
w^-1(a0) < 0.  The exceptional pairs also get H^0(w, g/b) = g.
"""

from itertools import combinations

from schubaut import build_root_system, verify

for t, n in [("A", 3), ("B", 3), ("C", 3), ("G", 2)]:
    rs = build_root_system(t, n)
    for k in range(1, n):
        for I in combinations(rs.simple_indices, k):
            r = verify(rs, I)
            iii = "" if r.condition_iii is None else f" H0=g:{r.condition_iii}"
            print(f"{rs.name} I={set(I)} w={r.witness} ({r.route}) passed={r.passed}{iii}")

# diagnostics: the H^0 model on a generic word, reported but not required
r = verify(build_root_system("B", 3), (1, 3), diagnose_h0=True)
print(r.diagnostics[0][:90])
