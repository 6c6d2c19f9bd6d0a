import itertools
import math

import pytest

from conftest import SMALL_TYPES, W, proper_subsets
from schubaut.errors import EnumerationTooLarge
from schubaut.rootsys import Weight, build_root_system
from schubaut.weyl import (
    WeylWord,
    coset_factorize,
    descent_stabilizer,
    enumerate_group,
    enumerate_min_reps,
    inversion_set,
    length,
    longest_element,
    stabilizer_simple_roots,
)

GROUP_ORDERS = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("B", 2): 8, ("B", 3): 48, ("C", 3): 48, ("G", 2): 12}


def perm_of(letters, n):
    """Type A_n oracle: the word as a permutation of 0..n."""
    perm = list(range(n + 1))
    for i in reversed(letters):
        perm = [p if p not in (i - 1, i) else (i if p == i - 1 else i - 1) for p in perm]
    return perm


def perm_inversion_roots(perm, n):
    out = set()
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            if perm[a] > perm[b]:
                out.add(Weight([1 if a <= k < b else 0 for k in range(n)]))
    return out


@pytest.mark.parametrize("n", [2, 3])
def test_type_a_against_permutations(n):
    rs = build_root_system("A", n)
    elements = enumerate_group(rs)
    assert len(elements) == math.factorial(n + 1)
    perms = {tuple(perm_of(w.letters, n)) for w in elements}
    assert len(perms) == math.factorial(n + 1)
    for w in elements:
        assert w.inversion_set == perm_inversion_roots(perm_of(w.letters, n), n)


def test_act_examples(G2, C3, A2):
    w = W(G2, 1, 2, 1, 2)
    assert w.inverse().act(G2.highest_root) == -Weight(0, 1)
    w = W(C3, 1, 2, 3)
    assert w.inverse().act(C3.highest_root) == -Weight(0, 0, 1)
    mu = Weight(3, -7)
    assert WeylWord.identity(A2).act(mu) == mu


def test_simple_reflection_involutive(G2):
    mu = Weight(5, -2)
    for i in (1, 2):
        assert W(G2, i, i).act(mu) == mu
        assert W(G2, i, i).is_identity()


def test_inversion_examples(A2):
    # w = s1 s2: w^{-1}(alpha_1) = s2(-alpha_1) = -(alpha_1 + alpha_2) < 0
    w = W(A2, 1, 2)
    simple = {Weight(1, 0): 1, Weight(0, 1): 2}
    assert {simple[b] for b in inversion_set(w.inverse()) if b in simple} == {1}
    v = W(A2, 2, 1)
    assert {simple[b] for b in inversion_set(v.inverse()) if b in simple} == {2}
    perm = perm_of((2, 1), 2)
    assert perm_inversion_roots(perm, 2) & set(simple) == {Weight(1, 0)}
    assert inversion_set(WeylWord.identity(A2)) == frozenset()
    assert inversion_set(longest_element(A2)) == frozenset(A2.positive_roots)


@pytest.mark.parametrize("t,n", SMALL_TYPES)
def test_exhaustive_length_properties(t, n):
    rs = build_root_system(t, n)
    elements = enumerate_group(rs)
    assert len(elements) == GROUP_ORDERS[(t, n)]
    assert len(set(elements)) == len(elements)
    for w in elements:
        assert w.is_reduced()
        assert length(w) == len(w.letters)
        winv = w.inverse()
        assert length(winv) == length(w)
        assert winv.inversion_set == frozenset(-w.act(b) for b in w.inversion_set)
        assert w.reduced() is w


@pytest.mark.parametrize("t,n", SMALL_TYPES + [("D", 4), ("F", 4), ("E", 6)])
def test_longest_element(t, n):
    rs = build_root_system(t, n)
    w0 = longest_element(rs)
    assert w0.is_reduced()
    assert w0.length == len(rs.positive_roots)
    assert sorted(-w0.act(b) for b in rs.positive_roots) == sorted(rs.positive_roots)
    assert (w0 * w0).is_identity()


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("G", 2)])
def test_parabolic_longest_elements(t, n):
    rs = build_root_system(t, n)
    for k in range(n + 1):
        for J in itertools.combinations(rs.simple_indices, k):
            w = longest_element(rs, J)
            assert w.is_reduced()
            span = {b for b in rs.positive_roots if all(b[i - 1] == 0 for i in rs.simple_indices if i not in J)}
            assert w.inversion_set == frozenset(span)
            assert (w * w).is_identity()
    assert longest_element(rs, ()).letters == ()


def test_longest_lengths(A2):
    assert longest_element(A2).length == 3
    assert longest_element(build_root_system("B", 2)).length == 4


def test_coset_examples(A2):
    w0 = W(A2, 1, 2, 1)
    wJ, w_J = coset_factorize(w0, {2})
    assert wJ == W(A2, 2, 1)
    assert w_J.letters == (2,)
    assert wJ.inverse() == W(A2, 1, 2)
    same, ident = coset_factorize(w0, ())
    assert same == w0 and ident.letters == ()
    a3 = build_root_system("A", 3)
    wJ, _ = coset_factorize(longest_element(a3), {1, 3})
    assert wJ.length == 4


@pytest.mark.parametrize("t,n", SMALL_TYPES)
def test_coset_factorize_exhaustive(t, n):
    rs = build_root_system(t, n)
    for w in enumerate_group(rs):
        for k in range(n + 1):
            for J in itertools.combinations(rs.simple_indices, k):
                wJ, w_J = coset_factorize(w, J)
                assert wJ * w_J == w
                assert set(w_J.letters) <= set(J)
                assert all(wJ.act(Weight.unit(n, j)).is_positive() for j in J)
                assert w.length == wJ.length + w_J.length
                again, ident = coset_factorize(wJ, J)
                assert again == wJ and ident.is_identity()


def test_min_rep_examples(A2):
    assert len(enumerate_min_reps(A2, {2})) == 3
    assert [w.letters for w in enumerate_min_reps(A2, {1, 2})] == [()]
    a3 = build_root_system("A", 3)
    assert len(enumerate_min_reps(a3, {1, 3})) == 6


@pytest.mark.parametrize("t,n", SMALL_TYPES)
def test_min_rep_counts(t, n):
    rs = build_root_system(t, n)
    order = GROUP_ORDERS[(t, n)]
    for k in range(n + 1):
        for J in itertools.combinations(rs.simple_indices, k):
            reps = enumerate_min_reps(rs, J)
            sub = len([w for w in enumerate_group(rs) if set(w.letters) <= set(J)])
            assert len(reps) * sub == order
            for w in reps:
                assert all(w.act(Weight.unit(n, j)).is_positive() for j in J)


def test_enumeration_guard(monkeypatch):
    rs = build_root_system("B", 3)
    with pytest.raises(EnumerationTooLarge):
        enumerate_group(rs, limit=10)
    monkeypatch.setenv("SCHUBERT_AUT_MAX_ENUM", "5")
    with pytest.raises(EnumerationTooLarge):
        enumerate_group(rs)


def test_stabilizer_examples(A2):
    assert stabilizer_simple_roots(W(A2, 1, 2)) == {1}
    a3 = build_root_system("A", 3)
    assert stabilizer_simple_roots(W(a3, 2, 1, 3, 2)) == {2}
    assert stabilizer_simple_roots(WeylWord.identity(A2)) == frozenset()


@pytest.mark.parametrize("t,n", SMALL_TYPES)
def test_stabilizer_routes_agree(t, n):
    rs = build_root_system(t, n)
    for w in enumerate_group(rs):
        winv = w.inverse()
        by_inv = {i for i in rs.simple_indices if winv.act(Weight.unit(n, i)).is_negative()}
        assert by_inv == descent_stabilizer(w) == stabilizer_simple_roots(w)


def test_equality_is_by_action(A2):
    assert W(A2, 1, 2, 1) == W(A2, 2, 1, 2)
    assert hash(W(A2, 1, 2, 1)) == hash(W(A2, 2, 1, 2))
    assert W(A2, 1, 1) == WeylWord.identity(A2)
    assert not W(A2, 1, 2, 1, 1).is_reduced()
    assert W(A2, 1, 2, 1, 1).reduced().letters == (1, 2)
    with pytest.raises(IndexError):
        W(A2, 3)


def test_stabilizer_generic_witness_lengths():
    for t, n in [("A", 3), ("B", 3), ("D", 4)]:
        rs = build_root_system(t, n)
        w0 = longest_element(rs)
        for I in proper_subsets(n):
            J = set(rs.simple_indices) - set(I)
            wJ, w_J = coset_factorize(w0, J)
            assert wJ.length == w0.length - longest_element(rs, J).length
