"""Exception hierarchy shared by all modules."""


class SchubautError(Exception):
    """Base class for every error raised by this package."""


class InvalidType(SchubautError, ValueError):
    """Unsupported (type letter, rank) pair."""


class EnumerationTooLarge(SchubautError):
    """An enumeration would exceed the configured element guard."""


class NonReducedWord(SchubautError, ValueError):
    pass


class NonDominantWeight(SchubautError, ValueError):
    pass


class InvalidParabolic(SchubautError, ValueError):
    """The index set does not describe a parabolic with B < P < G."""


class NotInWr(SchubautError, ValueError):
    """Sequence does not describe an element of W(r)."""


class ModelError(SchubautError):
    """The string-decomposition model of H^0 cannot be applied.

    ``prefix`` is filled in by :func:`schubaut.gmod.h0_word` with the suffix of
    the word already processed when the failure happened.
    """

    def __init__(self, message, *, gamma=None, prefix=None):
        super().__init__(message)
        self.gamma = gamma
        self.prefix = prefix

    def __str__(self):
        msg = super().__str__()
        if self.prefix is not None:
            msg += f" (after processing letters {list(self.prefix)})"
        return msg


class NonContiguousString(ModelError):
    pass


class ModelAmbiguity(ModelError):
    pass


class RectangleOverflow(ModelError):
    pass
