"""H^0(w, g/b) computed on T-weight atoms of the adjoint representation.

A T-module inside g is a multiset of atoms: one :class:`RootAtom` per root
and one zero-weight :class:`CartanMarker` per simple index.  For a simple
root gamma, the atoms of g split into gamma-strings (irreducible
sl_2-modules).  :func:`h0_step` reads the part of a module lying in one string
as an indecomposable B_gamma-module ``V' (x) C_mu``: a run of ``d``
consecutive slots is ``V'`` of dimension ``d`` twisted by its central weight
``mu``.  Then

* ``<mu, gamma^vee> >= 0``: H^0 is ``V' (x) H^0(C_mu)``, a "rectangle" running
  from the top slot of the run down to its gamma-reflection;
* ``<mu, gamma^vee> < 0``: nothing survives in degree 0.

The model refuses to guess: a run with gaps raises NonContiguousString and a
rectangle that hits a slot twice raises ModelAmbiguity.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .errors import ModelAmbiguity, ModelError, NonContiguousString, NonReducedWord, RectangleOverflow
from .rootsys import RootSystem, Weight
from .weyl import WeylWord

__all__ = [
    "RootAtom",
    "CartanMarker",
    "Atom",
    "TModule",
    "GammaString",
    "AdjointComparison",
    "adjoint_atoms",
    "adjoint_quotient",
    "gamma_strings",
    "h0_step",
    "h0_word",
    "h0_trace",
    "equals_adjoint",
    "atom_sort_key",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootAtom:
    weight: Weight

    def __post_init__(self):
        if self.weight.is_zero():
            raise ValueError("root atoms carry a nonzero weight")

    def __str__(self):
        return str(self.weight)


@dataclass(frozen=True)
class CartanMarker:
    """Zero-weight line of the Cartan subalgebra tagged h(alpha_index)."""

    index: int
    rank: int

    @property
    def weight(self) -> Weight:
        return Weight.zero(self.rank)

    def __str__(self):
        return f"h(a{self.index})"


Atom = Union[RootAtom, CartanMarker]


def atom_sort_key(atom: Atom):
    """Order by weight coordinates, markers by index."""
    return (atom.weight.coords, getattr(atom, "index", 0))


class TModule:
    """Immutable multiset of atoms."""

    __slots__ = ("_counts",)

    def __init__(self, atoms: Iterable[Atom] = ()):
        counts = Counter(atoms)
        self._counts = dict(sorted(counts.items(), key=lambda kv: atom_sort_key(kv[0])))

    @classmethod
    def from_counts(cls, counts) -> TModule:
        m = cls()
        m._counts = dict(sorted(((a, c) for a, c in counts.items() if c > 0),
                                key=lambda kv: atom_sort_key(kv[0])))
        return m

    @property
    def counts(self) -> dict[Atom, int]:
        return dict(self._counts)

    def multiplicity(self, atom: Atom) -> int:
        return self._counts.get(atom, 0)

    def distinct(self) -> list[Atom]:
        return list(self._counts)

    def __iter__(self):
        for atom, c in self._counts.items():
            for _ in range(c):
                yield atom

    def __len__(self):
        return sum(self._counts.values())

    def __contains__(self, atom):
        return atom in self._counts

    def __eq__(self, other):
        if isinstance(other, TModule):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._counts.items()))

    def __or__(self, other: TModule) -> TModule:
        """Multiset union (max of multiplicities)."""
        keys = set(self._counts) | set(other._counts)
        return TModule.from_counts({a: max(self.multiplicity(a), other.multiplicity(a)) for a in keys})

    def __le__(self, other: TModule) -> bool:
        return all(other.multiplicity(a) >= c for a, c in self._counts.items())

    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for c in self._counts.values())

    def weight_space_dims(self) -> dict[Weight, int]:
        dims: dict[Weight, int] = {}
        for atom, c in self._counts.items():
            dims[atom.weight] = dims.get(atom.weight, 0) + c
        return dims

    def __repr__(self):
        return "TModule{" + ", ".join(str(a) for a in self) + "}"


def adjoint_atoms(rs: RootSystem) -> TModule:
    """All atoms of g: every root plus one marker per simple index."""
    atoms = [RootAtom(b) for b in rs.roots]
    atoms += [CartanMarker(i, rs.rank) for i in rs.simple_indices]
    return TModule(atoms)


def adjoint_quotient(rs: RootSystem) -> TModule:
    """g/b as a T-module: one atom per positive root."""
    return TModule(RootAtom(b) for b in rs.positive_roots)


@dataclass(frozen=True)
class GammaString:
    """Slots of one gamma-string of g, highest <., gamma^vee> first."""

    gamma: int
    slots: tuple[Atom, ...]

    def __len__(self):
        return len(self.slots)

    def __str__(self):
        return "[" + " > ".join(str(a) for a in self.slots) + "]"


@lru_cache(maxsize=None)
def _gamma_strings(rs: RootSystem, gamma: int) -> tuple[GammaString, ...]:
    g = Weight.unit(rs.rank, gamma)
    strings = [GammaString(gamma, (RootAtom(g), CartanMarker(gamma, rs.rank), RootAtom(-g)))]
    for beta in sorted(rs.roots, key=lambda b: b.coords, reverse=True):
        if beta in (g, -g) or (beta + g) in rs.roots:
            continue
        slots = []
        cur = beta
        while cur in rs.roots:
            slots.append(RootAtom(cur))
            cur = cur - g
        if len(slots) != 1 + rs.pairing(beta, gamma):
            raise AssertionError(f"{rs.name}: gamma-string through {beta} has wrong length")
        strings.append(GammaString(gamma, tuple(slots)))
    for j in rs.simple_indices:
        if j != gamma:
            strings.append(GammaString(gamma, (CartanMarker(j, rs.rank),)))
    return tuple(strings)


def gamma_strings(rs: RootSystem, gamma: int) -> list[GammaString]:
    """Partition of the atoms of g into gamma-strings."""
    rs.check_index(gamma)
    return list(_gamma_strings(rs, gamma))


@lru_cache(maxsize=None)
def _slot_index(rs: RootSystem, gamma: int) -> dict[Atom, tuple[int, int]]:
    return {atom: (s, k) for s, st in enumerate(_gamma_strings(rs, gamma)) for k, atom in enumerate(st.slots)}


def h0_step(rs: RootSystem, gamma: int, module: TModule) -> TModule:
    """H^0(s_gamma, M) for a T-module M inside g, computed string by string."""
    rs.check_index(gamma)
    strings = _gamma_strings(rs, gamma)
    where = _slot_index(rs, gamma)

    occupied: dict[int, list[int]] = {}
    for atom, c in module.counts.items():
        if atom not in where:
            raise ValueError(f"{atom} is not an atom of g for {rs.name}")
        if c > 1:
            raise ModelAmbiguity(f"input atom {atom} has multiplicity {c}", gamma=gamma)
        s, k = where[atom]
        occupied.setdefault(s, []).append(k)

    out: Counter = Counter()
    for s, ks in sorted(occupied.items()):
        string = strings[s]
        ks.sort()
        top, d = ks[0], len(ks)
        if ks[-1] - top + 1 != d:
            raise NonContiguousString(
                f"s{gamma}: module meets string {string} in non-adjacent slots {ks}", gamma=gamma
            )
        center = sum((string.slots[k].weight for k in ks), rs.zero()) / d
        c = rs.pairing(center, gamma)
        if c < 0:
            continue
        c = int(c)
        hits: Counter = Counter()
        for a in range(d):
            for b in range(c + 1):
                hits[top + a + b] += 1
        for k, mult in hits.items():
            if k >= len(string):
                raise RectangleOverflow(
                    f"s{gamma}: rectangle from {string.slots[top]} leaves string {string}", gamma=gamma
                )
            if mult > 1:
                raise ModelAmbiguity(
                    f"s{gamma}: weight {string.slots[k].weight} would occur {mult} times "
                    f"(run of {d} slots with <mu, gamma^vee> = {c} in {string})",
                    gamma=gamma,
                )
            out[string.slots[k]] += 1
    return TModule.from_counts(out)


def _as_letters(rs: RootSystem, word) -> tuple[int, ...]:
    if isinstance(word, WeylWord):
        if word.rs is not rs:
            raise ValueError("word belongs to a different root system")
        return word.letters
    return tuple(int(i) for i in word)


def h0_trace(rs: RootSystem, word, module: TModule | None = None) -> list[tuple[tuple[int, ...], TModule]]:
    """Every stage of H^0(word, M), peeling letters from the right.

    Entry ``(suffix, N)`` means ``N = H^0(suffix, M)``; the first entry is the
    empty suffix and the last is the whole word.  ``module`` defaults to g/b.
    """
    letters = _as_letters(rs, word)
    w = WeylWord(rs, letters)
    if not w.is_reduced():
        raise NonReducedWord(f"{w!r} is not reduced")
    cur = adjoint_quotient(rs) if module is None else module
    trace = [((), cur)]
    for pos in range(len(letters) - 1, -1, -1):
        gamma = letters[pos]
        try:
            nxt = h0_step(rs, gamma, cur)
        except ModelError as exc:
            exc.prefix = letters[pos + 1:]
            raise
        if not cur <= nxt:
            lost = [str(a) for a in cur.distinct() if nxt.multiplicity(a) < cur.multiplicity(a)]
            log.warning("H^0 step s%d after %s dropped atoms %s", gamma, letters[pos + 1:], lost)
        cur = nxt
        trace.append((letters[pos:], cur))
    return trace


def h0_word(rs: RootSystem, word, module: TModule | None = None) -> TModule:
    """H^0(w, M) = H^0(s_{i1}, H^0(s_{i2}, ... H^0(s_{ik}, M)))."""
    return h0_trace(rs, word, module)[-1][1]


@dataclass(frozen=True)
class AdjointComparison:
    equal: bool
    missing: tuple[Atom, ...]
    extra: tuple[Atom, ...]

    def __bool__(self):
        return self.equal


def equals_adjoint(rs: RootSystem, module: TModule) -> AdjointComparison:
    """Compare M with g atom by atom (markers per index)."""
    full = adjoint_atoms(rs)
    missing = []
    extra = []
    for atom in full.distinct():
        missing.extend([atom] * max(0, 1 - module.multiplicity(atom)))
    for atom, c in module.counts.items():
        extra.extend([atom] * max(0, c - full.multiplicity(atom)))
    return AdjointComparison(not missing and not extra, tuple(missing), tuple(extra))

