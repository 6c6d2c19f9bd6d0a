"""Root systems of the simple types A_n through G_2.

Weights are stored in the basis of simple roots with exact rational
coordinates.  Simple roots follow Bourbaki numbering and all public indices
are 1-based, so ``alpha(rs, 1)`` is the usual alpha_1.  The Cartan
matrix is oriented so that ``cartan[i][j] = <alpha_j, alpha_i^vee>``.

>>> rs = build_root_system("G", 2)
>>> rs.highest_root
Weight(3, 2)
>>> len(rs.positive_roots)
6
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence

import sympy

from .errors import InvalidType

__all__ = [
    "Weight",
    "RootSystem",
    "build_root_system",
    "cartan_matrix",
    "pairing",
    "to_fundamental",
    "to_simple",
    "alpha",
    "SUPPORTED_TYPES",
]

SUPPORTED_TYPES = "ABCDEFG"

# number of positive roots, keyed by type letter
_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class Weight:
    """An exact rational vector in the simple-root basis."""

    __slots__ = ("coords", "_hash")

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Rational)):
            coords = tuple(coords[0])
        self.coords = tuple(Fraction(c) for c in coords)
        self._hash = hash(self.coords)

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls([0] * rank)

    @classmethod
    def unit(cls, rank: int, i: int) -> Weight:
        """The simple root alpha_i (1-based) as a weight of the given rank."""
        v = [0] * rank
        v[i - 1] = 1
        return cls(v)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Weight):
            return self.coords == other.coords
        return NotImplemented

    def __lt__(self, other):
        return self.coords < other.coords

    def __add__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return Weight([a + b for a, b in zip(self.coords, other.coords, strict=True)])

    def __sub__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return Weight([a - b for a, b in zip(self.coords, other.coords, strict=True)])

    def __neg__(self):
        return Weight([-a for a in self.coords])

    def __mul__(self, k):
        if not isinstance(k, (int, Rational)):
            return NotImplemented
        return Weight([a * k for a in self.coords])

    __rmul__ = __mul__

    def __truediv__(self, k):
        return Weight([a / k for a in self.coords])

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_positive(self) -> bool:
        """Nonzero with all coordinates >= 0 (for roots: beta > 0)."""
        return all(c >= 0 for c in self.coords) and not self.is_zero()

    def is_negative(self) -> bool:
        return all(c <= 0 for c in self.coords) and not self.is_zero()

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __repr__(self):
        return "Weight(" + ", ".join(str(c) for c in self.coords) + ")"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}" if mag.denominator == 1 else f"({mag})"
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign}{coef}a{i}")
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s[0] == "+" else s


def cartan_matrix(type_letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entries ``<alpha_j, alpha_i^vee>`` (Bourbaki order).

    Ranks 1 of types B and C are accepted as aliases of A_1.
    """
    t = type_letter.upper() if isinstance(type_letter, str) else type_letter
    n = rank
    ok = {
        "A": n >= 1,
        "B": n >= 1,
        "C": n >= 1,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }
    if t not in ok or not isinstance(n, int) or not ok[t]:
        raise InvalidType(f"unsupported root system type {type_letter!r} of rank {rank!r}")

    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        # 1-based: c[i][j] = a, c[j][i] = b
        c[i - 1][j - 1] = a
        c[j - 1][i - 1] = b

    if t in "ABCDF":
        chain = n - 1 if t == "D" else n
        for i in range(1, chain):
            link(i, i + 1)
        if t == "B" and n >= 2:
            link(n, n - 1, -2, -1)
        elif t == "C" and n >= 2:
            link(n - 1, n, -2, -1)
        elif t == "D":
            link(n - 2, n)
        elif t == "F":
            link(3, 2, -2, -1)
    elif t == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif t == "G":
        link(1, 2, -3, -1)
    return tuple(tuple(row) for row in c)


def _symmetrizer(cartan) -> tuple[int, ...]:
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    den = lcm(*(x.denominator for x in d))
    ints = [int(x * den) for x in d]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable Cartan datum of a simple root system.

    Build instances with :func:`build_root_system`; the constructor performs no
    validation.
    """

    type_letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Weight, ...]
    highest_root: Weight
    rho: Weight

    def __repr__(self):
        return f"RootSystem({self.type_letter}{self.rank})"

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    @property
    def simple_indices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @cached_property
    def roots(self) -> frozenset[Weight]:
        return frozenset(self.positive_roots) | frozenset(-b for b in self.positive_roots)

    @cached_property
    def integral_positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(c) for c in b) for b in self.positive_roots)

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(Weight.unit(self.rank, i) for i in self.simple_indices)

    def zero(self) -> Weight:
        return Weight.zero(self.rank)

    def check_index(self, i: int) -> None:
        if not (isinstance(i, int) and 1 <= i <= self.rank):
            raise IndexError(f"simple root index {i!r} out of range for {self.name}")

    def _check_weight(self, mu: Weight) -> None:
        if len(mu) != self.rank:
            raise ValueError(f"weight {mu!r} has wrong length for {self.name}")

    def pairing(self, mu: Weight, i: int) -> Fraction:
        """<mu, alpha_i^vee>."""
        self.check_index(i)
        self._check_weight(mu)
        row = self.cartan[i - 1]
        return sum((row[j] * mu[j] for j in range(self.rank)), Fraction(0))

    def inner(self, mu: Weight, nu: Weight) -> Fraction:
        """W-invariant form with (alpha_i, alpha_j) = d_i * cartan[i][j]."""
        total = Fraction(0)
        for i in range(self.rank):
            if mu[i] == 0:
                continue
            di = self.symmetrizer[i]
            row = self.cartan[i]
            total += mu[i] * di * sum(row[j] * nu[j] for j in range(self.rank))
        return total

    def coroot_pairing(self, mu: Weight, beta: Weight) -> Fraction:
        """<mu, beta^vee> = 2(mu, beta)/(beta, beta) for any root beta."""
        return 2 * self.inner(mu, beta) / self.inner(beta, beta)

    def is_dominant(self, mu: Weight) -> bool:
        return all(self.pairing(mu, i) >= 0 for i in self.simple_indices)

    def reflect(self, mu: Weight, i: int) -> Weight:
        """s_i(mu) = mu - <mu, alpha_i^vee> alpha_i."""
        p = self.pairing(mu, i)
        if p == 0:
            return mu
        coords = list(mu.coords)
        coords[i - 1] -= p
        return Weight(coords)

    def is_root(self, mu: Weight) -> bool:
        return mu in self.roots

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        inv = sympy.Matrix(self.cartan).inv()
        return tuple(
            tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(self.rank))
            for i in range(self.rank)
        )

    def to_fundamental(self, mu: Weight) -> tuple[Fraction, ...]:
        """Coordinates of mu in the basis of fundamental weights."""
        return tuple(self.pairing(mu, i) for i in self.simple_indices)

    def to_simple(self, v: Sequence) -> Weight:
        """Inverse of :meth:`to_fundamental`."""
        if len(v) != self.rank:
            raise ValueError(f"expected {self.rank} fundamental coordinates, got {len(v)}")
        inv = self.cartan_inverse
        return Weight([sum((inv[i][j] * Fraction(v[j]) for j in range(self.rank)), Fraction(0))
                       for i in range(self.rank)])

    def fundamental_weight(self, i: int) -> Weight:
        self.check_index(i)
        return self.to_simple([1 if k == i else 0 for k in self.simple_indices])


def _reflection_closure(cartan) -> set[tuple[int, ...]]:
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for i in range(n):
            p = sum(cartan[i][j] * beta[j] for j in range(n))
            if p == 0:
                continue
            img = list(beta)
            img[i] -= p
            img = tuple(img)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return seen


@lru_cache(maxsize=None)
def build_root_system(type_letter: str, rank: int) -> RootSystem:
    """Construct the root system of the given simple type.

    Roots are generated as the closure of the simple roots under the simple
    reflections; the resulting count is checked against the classification.
    """
    cartan = cartan_matrix(type_letter, rank)
    t = type_letter.upper()
    roots = _reflection_closure(cartan)
    positive = sorted((r for r in roots if all(c >= 0 for c in r)),
                      key=lambda r: (sum(r), r))
    expected = _ROOT_COUNTS[t](rank) if not (t in "BC" and rank == 1) else 1
    if len(positive) != expected or len(roots) != 2 * expected:
        raise AssertionError(f"{t}{rank}: generated {len(positive)} positive roots, expected {expected}")

    tops = [r for r in positive
            if all(tuple(c + (k == i) for k, c in enumerate(r)) not in roots for i in range(rank))]
    if len(tops) != 1:
        raise AssertionError(f"{t}{rank}: highest root not unique: {tops}")

    pos_w = tuple(Weight(r) for r in positive)
    half_sum = sum(pos_w, Weight.zero(rank)) / 2
    rs = RootSystem(
        type_letter=t,
        rank=rank,
        cartan=cartan,
        symmetrizer=_symmetrizer(cartan),
        positive_roots=pos_w,
        highest_root=Weight(tops[0]),
        rho=half_sum,
    )
    if rs.to_simple([1] * rank) != half_sum:
        raise AssertionError(f"{t}{rank}: half-sum of positive roots differs from sum of fundamental weights")
    return rs


def alpha(rs: RootSystem, i: int) -> Weight:
    """The simple root alpha_i."""
    rs.check_index(i)
    return Weight.unit(rs.rank, i)


def pairing(rs: RootSystem, mu: Weight, i: int) -> Fraction:
    return rs.pairing(mu, i)


def to_fundamental(rs: RootSystem, mu: Weight) -> tuple[Fraction, ...]:
    return rs.to_fundamental(mu)


def to_simple(rs: RootSystem, v: Iterable) -> Weight:
    return rs.to_simple(list(v))
