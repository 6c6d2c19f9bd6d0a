import itertools
from math import comb

import pytest

from conftest import UP_TO_RANK5, W, proper_subsets
from schubaut.errors import InvalidParabolic, NotInWr
from schubaut.gmod import adjoint_atoms
from schubaut.pipeline import (
    NO_SCHUBERT_VARIETY,
    GrassmannianElement,
    ParabolicSubset,
    direct_alpha0_negative,
    direct_grassmannian_stabilizer,
    grassmannian_elements,
    grassmannian_unique_faithful,
    in_derived_table,
    is_exceptional,
    jprime,
    jw,
    lemma41_check,
    sequence_test,
    verify,
    verify_full,
    witness,
    worked_words,
)
from schubaut.rootsys import Weight, build_root_system
from schubaut.weyl import WeylWord, coset_factorize, enumerate_group, longest_element, stabilizer_simple_roots


def test_parabolic_subset_bounds(A2):
    with pytest.raises(InvalidParabolic) as info:
        ParabolicSubset(A2, [])
    assert str(info.value) == NO_SCHUBERT_VARIETY
    with pytest.raises(InvalidParabolic):
        ParabolicSubset(A2, [1, 2])
    with pytest.raises(IndexError):
        ParabolicSubset(A2, [3])
    assert ParabolicSubset(A2, [1]).complement == {2}


def test_is_exceptional_examples():
    assert is_exceptional(build_root_system("B", 4), {4})
    assert is_exceptional(build_root_system("C", 3), {1})
    assert is_exceptional(build_root_system("G", 2), {1})
    assert not is_exceptional(build_root_system("B", 4), {1})
    assert not is_exceptional(build_root_system("G", 2), {2})
    assert not is_exceptional(build_root_system("A", 3), {3})


def test_jprime_examples():
    a3 = build_root_system("A", 3)
    assert jprime(a3, {1}) == {3}
    assert jprime(a3, {1, 2, 3}) == {1, 2, 3}
    for t, n in [("B", 3), ("C", 4), ("G", 2), ("F", 4), ("E", 7)]:
        rs = build_root_system(t, n)
        for J in proper_subsets(n):
            assert jprime(rs, J) == set(J)
    e6 = build_root_system("E", 6)
    assert jprime(e6, {1}) == {6} and jprime(e6, {2}) == {2}
    d5 = build_root_system("D", 5)
    assert jprime(d5, {4}) == {5}


@pytest.mark.parametrize("t,n", UP_TO_RANK5 + [("E", 6)])
def test_jprime_involution(t, n):
    rs = build_root_system(t, n)
    for J in proper_subsets(n):
        assert jprime(rs, jprime(rs, J)) == set(J)


def test_witness_examples(A2):
    assert witness(A2, {1}) == W(A2, 1, 2)
    assert witness(A2, {2}) == W(A2, 2, 1)
    a3 = build_root_system("A", 3)
    assert witness(a3, {2}) == W(a3, 2, 1, 3, 2)
    g2 = build_root_system("G", 2)
    assert witness(g2, {1}).letters == (1, 2, 1, 2)
    b3 = build_root_system("B", 3)
    assert witness(b3, {3}).letters == (3, 2, 1, 3, 2)
    c4 = build_root_system("C", 4)
    assert witness(c4, {1}).letters == (1, 2, 3, 4)
    assert witness(A2, full=True) == longest_element(A2)


def test_a2_brute_force_witnesses(A2):
    """In A2 the witness is the unique element with the right stabilizer and w^{-1}(a0) < 0."""
    for I in ({1}, {2}):
        hits = [w for w in enumerate_group(A2)
                if stabilizer_simple_roots(w) == I and direct_alpha0_negative(w)]
        assert hits == [witness(A2, I)]


def test_verify_examples(A2, C3):
    g2 = build_root_system("G", 2)
    rep = verify(g2, {1})
    assert rep.passed and rep.condition_i and rep.condition_ii and rep.condition_iii
    assert rep.alpha0_image == -Weight(0, 1)
    assert rep.provenance == "exceptional-G2" and rep.route == "exceptional-G2"
    rep = verify(C3, {1})
    assert rep.passed and rep.condition_iii and rep.missing == () and rep.extra == ()
    rep = verify(A2, {2})
    assert rep.passed and rep.witness.letters == (2, 1)
    assert rep.condition_iii is None and rep.route == "pass-by-theorem"
    assert not rep.model_derived


def test_verify_diagnostics():
    b3 = build_root_system("B", 3)
    rep = verify(b3, {1}, diagnose_h0=True)
    assert rep.passed and rep.model_derived and rep.condition_iii is None
    rep = verify(b3, {1, 3}, diagnose_h0=True)
    # generic route: a model failure is only a diagnostic
    assert rep.passed and rep.model_derived
    assert rep.diagnostics and rep.diagnostics[0].startswith("ModelAmbiguity")


def test_verify_full():
    for t, n in [("A", 1), ("B", 3), ("G", 2)]:
        rs = build_root_system(t, n)
        rep = verify_full(rs)
        assert rep.passed and rep.provenance == "full-group"
        assert rep.witness == longest_element(rs)
        assert rep.alpha0_image == -rs.highest_root


@pytest.mark.parametrize("t,n", UP_TO_RANK5)
def test_sweep(t, n):
    rs = build_root_system(t, n)
    w0 = longest_element(rs)
    for I in proper_subsets(n):
        rep = verify(rs, I)
        assert rep.passed, rep
        assert set(rep.stabilizer) == set(I)
        assert rep.exceptional == in_derived_table(rs, jprime(rs, set(rs.simple_indices) - set(I)))
        if rep.exceptional:
            assert rep.condition_iii is True
            assert rep.witness.letters in worked_words(rs)
        else:
            J = set(rs.simple_indices) - set(I)
            assert rep.witness.length == w0.length - longest_element(rs, J).length
            assert rep.route == "pass-by-theorem"


def test_exceptional_table_symmetry():
    for t, n in [("B", 2), ("B", 4), ("C", 3), ("C", 5), ("G", 2), ("F", 4), ("A", 4), ("D", 5)]:
        rs = build_root_system(t, n)
        S = set(rs.simple_indices)
        for I in proper_subsets(n):
            assert is_exceptional(rs, I) == in_derived_table(rs, jprime(rs, S - set(I)))


def test_exceptional_words_h0():
    for t, n, I in [("B", 4, {4}), ("C", 4, {1}), ("G", 2, {1})]:
        rs = build_root_system(t, n)
        rep = verify(rs, I)
        assert rep.condition_iii
    assert worked_words(build_root_system("A", 3)) == set()
    assert (2,) in worked_words(build_root_system("G", 2))


def test_grassmannian_counts():
    for n in range(1, 8):
        for r in range(1, n + 1):
            els = grassmannian_elements(n, r)
            assert len(els) == comb(n + 1, r)
            assert sum(e.is_identity() for e in els) == 1
            words = [e.word() for e in els]
            assert len(set(words)) == len(words)
            J = [j for j in range(1, n + 1) if j != r]
            for e, w in zip(els, words):
                assert w.is_reduced()
                wJ, _ = coset_factorize(w, J)
                assert wJ == w
    with pytest.raises(ValueError):
        grassmannian_elements(3, 4)


def test_grassmannian_examples():
    assert len(grassmannian_elements(3, 2)) == 6
    assert len(grassmannian_elements(4, 1)) == 5
    e = GrassmannianElement(3, 2, (1, 3))
    assert e.letters == (1, 3, 2)
    assert lemma41_check(3, 2, e) is True
    e = GrassmannianElement(3, 2, (3,))
    assert e.start == 2 and e.letters == (3, 2)
    assert lemma41_check(3, 2, e) is False
    assert lemma41_check(3, 2, GrassmannianElement(3, 2, ())) is False
    with pytest.raises(ValueError):
        lemma41_check(4, 2, e)


def test_sequence_test_exhaustive():
    for n in range(1, 8):
        for r in range(1, n + 1):
            for e in grassmannian_elements(n, r):
                assert sequence_test(e) == direct_alpha0_negative(e.word())


def test_jw_examples():
    assert jw(3, 2, (1, 3)) == {1, 3}
    assert direct_grassmannian_stabilizer(3, 2, GrassmannianElement(3, 2, (1, 3)).word()) == {1, 3}
    assert jw(4, 2, (3, 4)) == {1, 2, 3, 4}
    assert jw(2, 1, (2,)) == {1, 2}
    a2 = build_root_system("A", 2)
    assert direct_grassmannian_stabilizer(2, 1, W(a2, 2, 1)) == {1, 2}
    for bad in [(1, 2), (3, 3), (), (2, 1, 3), (0, 3)]:
        with pytest.raises(NotInWr):
            jw(3, 2, bad)


def test_jw_exhaustive():
    for n in range(1, 8):
        for r in range(1, n + 1):
            for seq in itertools.combinations(range(1, n), r - 1):
                seq = seq + (n,)
                e = GrassmannianElement(n, r, seq)
                assert e.in_wr()
                assert jw(n, r, seq) == direct_grassmannian_stabilizer(n, r, e.word())


def test_unique_faithful():
    for n in range(1, 8):
        assert grassmannian_unique_faithful(n, 1) == 1
        assert grassmannian_unique_faithful(n, n) == 1
    # r not in {1, n}: reported, not constrained
    assert grassmannian_unique_faithful(3, 2) == sum(
        sequence_test(e) for e in grassmannian_elements(3, 2))


def test_witness_h0_equals_g_on_exceptional_routes():
    for n in range(2, 6):
        rs = build_root_system("C", n)
        rep = verify(rs, {1})
        assert rep.passed and rep.condition_iii
        assert len(adjoint_atoms(rs)) == len(rs.roots) + n
    assert isinstance(witness(build_root_system("A", 2), {1}), WeylWord)
