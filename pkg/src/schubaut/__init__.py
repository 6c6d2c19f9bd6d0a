"""Schubert varieties whose automorphism group is a prescribed parabolic.

Exact combinatorics for root systems, Weyl groups, Demazure characters and
the H^0(w, g/b) computations that certify the witnesses.
"""

from .errors import (
    EnumerationTooLarge,
    InvalidParabolic,
    InvalidType,
    ModelAmbiguity,
    ModelError,
    NonContiguousString,
    NonDominantWeight,
    NonReducedWord,
    NotInWr,
    RectangleOverflow,
)
from .rootsys import RootSystem, Weight, build_root_system
from .weyl import WeylWord, longest_element
from .pipeline import verify, witness

__version__ = "0.1.0"
