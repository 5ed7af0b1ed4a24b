"""Domain errors raised by the sequence operations.

Index errors on cell positions use the builtin ``IndexError``; everything
else derives from :class:`AlphaSequenceError` so callers (and the CLI) can
catch domain failures in one place.
"""


class AlphaSequenceError(Exception):
    """Base class for domain errors."""


class PrefixAmbiguity(AlphaSequenceError):
    """meet() called on distinct sequences where one is a left factor of the other."""


class NotSplittable(AlphaSequenceError):
    """Splitting requested on a cell of value 1."""


class NotConjugatable(AlphaSequenceError):
    """Conjugation requested on a cell that is not a value-1 cell with a left neighbour."""


class Maximal(AlphaSequenceError):
    """No successor: the sequence is the maximal element of its set."""


class Minimal(AlphaSequenceError):
    """No predecessor: the sequence is the minimal element of its set."""


class NoCandidate(AlphaSequenceError):
    """No cell position yields a lexical rewrite (contract violation or maximum)."""


class NoDecomposition(AlphaSequenceError):
    """The reverse-step tail construction found neither structural form."""


class NotInSet(AlphaSequenceError):
    """The sequence is not a member of the set the operation targets."""


class InvalidN(AlphaSequenceError):
    """The degree parameter n is out of range."""


class InvalidSeed(AlphaSequenceError):
    """An enumeration seed does not belong to the requested set."""


class CapExceeded(AlphaSequenceError):
    """n is above the configured enumeration or oracle cap."""


class UndefinedOperation(AlphaSequenceError):
    """The operation has no defined result for this input (e.g. extend_even of the zero sequence)."""
