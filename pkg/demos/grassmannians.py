"""
Grassmannian Schubert varieties in type A
=========================================

"""

from schubaut.pipeline import (
    direct_grassmannian_stabilizer,
    grassmannian_elements,
    grassmannian_unique_faithful,
    jw,
    lemma41_check,
)

n, r = 4, 2
for e in grassmannian_elements(n, r):
    faithful = lemma41_check(n, r, e)
    line = f"{str(e.seq):<10} {' '.join(map(str, e.letters)) or 'id':<16} a0 test: {faithful}"
    if e.in_wr():
        J = jw(n, r, e.seq)
        assert J == direct_grassmannian_stabilizer(n, r, e.word())
        line += f"  J(w) = {sorted(J)}"
    print(line)

# projective space and its dual: exactly one faithful Schubert variety
for m in range(1, 8):
    print(f"A{m}: r=1 -> {grassmannian_unique_faithful(m, 1)}, r={m} -> {grassmannian_unique_faithful(m, m)}")
