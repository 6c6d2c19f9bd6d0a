"""Weyl group elements as words in simple reflections.

A :class:`WeylWord` keeps the letters it was built from, but two words are
equal when they act identically on the weight space.  The action of
``s_{i1} s_{i2} ... s_{ik}`` applies ``s_{ik}`` first.
"""

from __future__ import annotations

import os
from functools import cached_property
from typing import Iterable, Sequence

from .errors import EnumerationTooLarge
from .rootsys import RootSystem, Weight

__all__ = [
    "WeylWord",
    "act",
    "inversion_set",
    "length",
    "longest_element",
    "coset_factorize",
    "enumerate_min_reps",
    "enumerate_group",
    "stabilizer_simple_roots",
    "descent_stabilizer",
    "max_enum",
]

Matrix = tuple[tuple[int, ...], ...]

DEFAULT_MAX_ENUM = 10**6


def max_enum() -> int:
    """Enumeration guard; overridable through ``SCHUBERT_AUT_MAX_ENUM``."""
    raw = os.environ.get("SCHUBERT_AUT_MAX_ENUM")
    return int(raw) if raw else DEFAULT_MAX_ENUM


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    # column j is s_i(alpha_j) = alpha_j - c_ij alpha_i
    n = rs.rank
    row = rs.cartan[i - 1]
    return tuple(
        tuple(int(k == j) - (row[j] if k == i - 1 else 0) for j in range(n))
        for k in range(n)
    )


def _apply(m: Matrix, coords: Sequence) -> tuple:
    n = len(m)
    return tuple(sum(m[i][j] * coords[j] for j in range(n)) for i in range(n))


def _column_sign(m: Matrix, j: int) -> int:
    col = [m[i][j] for i in range(len(m))]
    if all(c >= 0 for c in col):
        return 1
    if all(c <= 0 for c in col):
        return -1
    raise AssertionError("matrix column is not a root")


def _reduced_letters(rs: RootSystem, m: Matrix) -> tuple[int, ...]:
    """A reduced word for the element with action matrix ``m``.

    Strips right descents (least index first) until the identity is reached.
    """
    letters = []
    ident = _identity(rs.rank)
    refl = [_reflection_matrix(rs, i) for i in rs.simple_indices]
    while m != ident:
        for j in range(rs.rank):
            if _column_sign(m, j) < 0:
                m = _matmul(m, refl[j])
                letters.append(j + 1)
                break
    return tuple(reversed(letters))


class WeylWord:
    """A word ``s_{i1} ... s_{ik}`` in the simple reflections of ``rs``."""

    def __init__(self, rs: RootSystem, letters: Iterable[int] = ()):
        self.rs = rs
        self.letters = tuple(int(i) for i in letters)
        for i in self.letters:
            rs.check_index(i)

    @classmethod
    def identity(cls, rs: RootSystem) -> WeylWord:
        return cls(rs, ())

    @classmethod
    def from_matrix(cls, rs: RootSystem, m: Matrix) -> WeylWord:
        return cls(rs, _reduced_letters(rs, m))

    @cached_property
    def matrix(self) -> Matrix:
        m = _identity(self.rs.rank)
        for i in self.letters:
            m = _matmul(m, _reflection_matrix(self.rs, i))
        return m

    def __eq__(self, other):
        if not isinstance(other, WeylWord):
            return NotImplemented
        return self.rs is other.rs and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.rs.name, self.matrix))

    def __mul__(self, other: WeylWord) -> WeylWord:
        if other.rs is not self.rs:
            raise ValueError("words belong to different root systems")
        return WeylWord(self.rs, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __repr__(self):
        inner = "".join(f"s{i}" for i in self.letters) or "id"
        return f"WeylWord({self.rs.name}: {inner})"

    def __str__(self):
        return " ".join(str(i) for i in self.letters)

    def inverse(self) -> WeylWord:
        return WeylWord(self.rs, reversed(self.letters))

    def act(self, mu: Weight) -> Weight:
        if len(mu) != self.rs.rank:
            raise ValueError(f"weight {mu!r} has wrong length for {self.rs.name}")
        return Weight(_apply(self.matrix, mu.coords))

    @cached_property
    def inversion_set(self) -> frozenset[Weight]:
        m = self.matrix
        return frozenset(
            b for b, ints in zip(self.rs.positive_roots, self.rs.integral_positive_roots)
            if all(c <= 0 for c in _apply(m, ints))
        )

    @property
    def length(self) -> int:
        return len(self.inversion_set)

    def is_reduced(self) -> bool:
        return len(self.letters) == self.length

    def is_identity(self) -> bool:
        return self.matrix == _identity(self.rs.rank)

    def reduced(self) -> WeylWord:
        """A reduced word for the same element (self if already reduced)."""
        if self.is_reduced():
            return self
        return WeylWord.from_matrix(self.rs, self.matrix)


def act(w: WeylWord, mu: Weight) -> Weight:
    return w.act(mu)


def inversion_set(w: WeylWord) -> frozenset[Weight]:
    """R^+(w): positive roots sent to negative roots by w."""
    return w.inversion_set


def length(w: WeylWord) -> int:
    return w.length


def _normalize_subset(rs: RootSystem, J) -> frozenset[int]:
    J = frozenset(int(j) for j in J)
    for j in J:
        rs.check_index(j)
    return J


def longest_element(rs: RootSystem, J=None) -> WeylWord:
    """Longest element of the parabolic subgroup W_J (all of W when J is None)."""
    J = frozenset(rs.simple_indices) if J is None else _normalize_subset(rs, J)
    letters = []
    m = _identity(rs.rank)
    refl = {j: _reflection_matrix(rs, j) for j in J}
    grew = True
    while grew:
        grew = False
        for j in sorted(J):
            if _column_sign(m, j - 1) > 0:
                m = _matmul(m, refl[j])
                letters.append(j)
                grew = True
                break
    return WeylWord(rs, letters)


def coset_factorize(w: WeylWord, J) -> tuple[WeylWord, WeylWord]:
    """Split ``w = w^J * w_J`` with ``w^J`` in W^J and ``w_J`` in W_J."""
    rs = w.rs
    J = _normalize_subset(rs, J)
    m = w.matrix
    stripped = []
    while True:
        for j in sorted(J):
            if _column_sign(m, j - 1) < 0:
                m = _matmul(m, _reflection_matrix(rs, j))
                stripped.append(j)
                break
        else:
            break
    return WeylWord.from_matrix(rs, m), WeylWord(rs, reversed(stripped))


def _in_min_reps(m: Matrix, J) -> bool:
    return all(_column_sign(m, j - 1) > 0 for j in J)


def enumerate_min_reps(rs: RootSystem, J=(), limit: int | None = None) -> list[WeylWord]:
    """All of W^J = {w : w(alpha_j) > 0 for j in J}, sorted by length.

    W^J is closed under taking suffixes of reduced words, so it is grown one
    length at a time by multiplying with simple reflections on the left.
    """
    J = _normalize_subset(rs, J)
    limit = max_enum() if limit is None else limit
    refl = [_reflection_matrix(rs, i) for i in rs.simple_indices]
    ident = _identity(rs.rank)
    previous: dict[Matrix, tuple[int, ...]] = {}
    level = {ident: ()}
    out = [WeylWord(rs, ())]
    while level:
        nxt: dict[Matrix, tuple[int, ...]] = {}
        for m, word in level.items():
            for i, s in enumerate(refl, start=1):
                u = _matmul(s, m)
                if u in previous or u in nxt or not _in_min_reps(u, J):
                    continue
                nxt[u] = (i,) + word
        previous, level = level, nxt
        for m, word in sorted(nxt.items(), key=lambda kv: kv[1]):
            out.append(WeylWord(rs, word))
            if len(out) > limit:
                raise EnumerationTooLarge(
                    f"W^J for {rs.name}, J={sorted(J)} exceeds {limit} elements"
                )
    return out


def enumerate_group(rs: RootSystem, limit: int | None = None) -> list[WeylWord]:
    """Every element of W, one reduced word each."""
    return enumerate_min_reps(rs, (), limit=limit)


def stabilizer_simple_roots(w: WeylWord) -> frozenset[int]:
    """Indices i with w^{-1}(alpha_i) < 0, i.e. the parabolic stabilizing X(w).

    Cross-checked against the left descent set {i : l(s_i w) < l(w)}.
    """
    rs = w.rs
    winv = w.inverse()
    by_inversion = frozenset(i for i in rs.simple_indices if winv.act(Weight.unit(rs.rank, i)).is_negative())
    by_descent = descent_stabilizer(w)
    if by_inversion != by_descent:
        raise AssertionError(f"stabilizer mismatch for {w!r}: {sorted(by_inversion)} vs {sorted(by_descent)}")
    return by_inversion


def descent_stabilizer(w: WeylWord) -> frozenset[int]:
    """Left descents {i : l(s_i w) < l(w)} computed from inversion counts."""
    rs = w.rs
    lw = w.length
    return frozenset(i for i in rs.simple_indices if (WeylWord(rs, (i,)) * w).length < lw)
