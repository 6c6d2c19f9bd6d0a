"""Characters of line-bundle cohomology on Schubert varieties.

Characters are exact multiplicity maps ``Weight -> int``.  The single
reflection operator ``demazure_op`` is H^0 over P_alpha/B on characters,
written as an Euler characteristic so that it is linear:

    <lam, a^vee> >= 0   e^lam -> e^lam + e^(lam - a) + ... + e^(s_a lam)
    <lam, a^vee> = -1   e^lam -> 0
    <lam, a^vee> <= -2  e^lam -> -(e^(lam + a) + ... + e^(s_a lam - a))
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction

from .errors import NonDominantWeight, NonReducedWord
from .rootsys import RootSystem, Weight
from .weyl import WeylWord, longest_element

__all__ = [
    "FormalCharacter",
    "GradedCharacter",
    "dot",
    "demazure_op",
    "demazure_character",
    "bott_cohomology_full_flag",
    "dominantize",
    "weyl_dimension",
]


class FormalCharacter(Mapping):
    """Finite formal sum of exponentials e^mu with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: dict[Weight, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for mu, m in items:
            if m:
                acc[mu] = acc.get(mu, 0) + m
        self._terms = {mu: m for mu, m in acc.items() if m}

    @classmethod
    def exp(cls, mu: Weight, mult: int = 1) -> FormalCharacter:
        return cls({mu: mult})

    def __getitem__(self, mu):
        return self._terms.get(mu, 0)

    def __contains__(self, mu):
        return mu in self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, FormalCharacter):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for mu, m in other.items():
            out[mu] = out.get(mu, 0) + m
        return FormalCharacter(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FormalCharacter({mu: -m for mu, m in self._terms.items()})

    def __mul__(self, k: int):
        return FormalCharacter({mu: k * m for mu, m in self._terms.items()})

    __rmul__ = __mul__

    def mass(self) -> int:
        """Sum of coefficients (the dimension for genuine characters)."""
        return sum(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def __repr__(self):
        body = ", ".join(f"{mu}: {m}" for mu, m in sorted(self._terms.items()))
        return f"FormalCharacter({{{body}}})"


# degree -> character; degrees with zero character are omitted
GradedCharacter = dict[int, FormalCharacter]


def dot(w: WeylWord, lam: Weight) -> Weight:
    """w . lam = w(lam + rho) - rho."""
    rho = w.rs.rho
    return w.act(lam + rho) - rho


def _apply(rs: RootSystem, i: int, base, terms: dict) -> dict:
    """D_i on terms keyed by offsets k, where the weight is base - sum k_j alpha_j.

    ``base`` holds the fundamental coordinates of the base weight.  Keeping
    offsets as integer tuples avoids rational arithmetic in the inner loop.
    """
    row = rs.cartan[i - 1]
    b = base[i - 1]
    r = rs.rank
    acc: dict = {}
    for k, m in terms.items():
        n = b - sum(row[j] * k[j] for j in range(r))
        if n != int(n):
            raise ValueError(f"pairing {n} with alpha_{i}^vee is not an integer")
        n = int(n)
        if n >= 0:
            ts, sign = range(n + 1), 1
        elif n == -1:
            continue
        else:
            ts, sign = range(-1, n, -1), -1
        ki = k[i - 1]
        for t in ts:
            nk = k[:i - 1] + (ki + t,) + k[i:]
            acc[nk] = acc.get(nk, 0) + sign * m
    return {k: m for k, m in acc.items() if m}


def demazure_op(rs: RootSystem, i: int, c: FormalCharacter) -> FormalCharacter:
    """Apply the Demazure operator D_i to a character (linear extension)."""
    rs.check_index(i)
    base = (0,) * rs.rank
    out = _apply(rs, i, base, {tuple(-x for x in mu): m for mu, m in c.items()})
    return FormalCharacter({Weight([-x for x in k]): m for k, m in out.items()})


def demazure_character(w: WeylWord, lam: Weight) -> FormalCharacter:
    """Character of H^0(X(w), L_lam): D_{i1}(D_{i2}(... D_{ik}(e^lam)))."""
    rs = w.rs
    if not w.is_reduced():
        raise NonReducedWord(f"{w!r} is not reduced")
    if not rs.is_dominant(lam):
        raise NonDominantWeight(f"{lam} is not dominant for {rs.name}")
    base = rs.to_fundamental(lam)
    terms = {(0,) * rs.rank: 1}
    for i in reversed(w.letters):
        terms = _apply(rs, i, base, terms)
    return FormalCharacter({lam - Weight(k): m for k, m in terms.items()})


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """prod over beta > 0 of <lam + rho, beta^vee> / <rho, beta^vee>."""
    if not rs.is_dominant(lam):
        raise NonDominantWeight(f"{lam} is not dominant for {rs.name}")
    shifted = lam + rs.rho
    num = Fraction(1)
    for beta in rs.positive_roots:
        num *= rs.coroot_pairing(shifted, beta) / rs.coroot_pairing(rs.rho, beta)
    if num.denominator != 1:
        raise AssertionError(f"Weyl dimension of {lam} is not an integer: {num}")
    return int(num)


def dominantize(rs: RootSystem, lam: Weight) -> tuple[Weight, int] | None:
    """Move lam into the dominant chamber with the dot action.

    Repeatedly applies s_i. for the least i with <lam + rho, alpha_i^vee> < 0.
    Returns (dominant weight, number of reflections), or None when lam + rho is
    singular.
    """
    cur = lam
    steps = 0
    while True:
        shifted = cur + rs.rho
        pairs = [rs.pairing(shifted, i) for i in rs.simple_indices]
        if any(p == 0 for p in pairs):
            return None
        neg = [i for i, p in zip(rs.simple_indices, pairs) if p < 0]
        if not neg:
            return cur, steps
        i = neg[0]
        cur = cur - (rs.pairing(cur, i) + 1) * Weight.unit(rs.rank, i)
        steps += 1


def bott_cohomology_full_flag(rs: RootSystem, lam: Weight) -> GradedCharacter:
    """H^*(G/B, L_lam) as a graded character.

    Empty when lam + rho is singular; otherwise the irreducible character of the
    dominantized weight, placed in degree equal to the number of reflections.
    """
    found = dominantize(rs, lam)
    if found is None:
        return {}
    dom, degree = found
    return {degree: demazure_character(longest_element(rs), dom)}
