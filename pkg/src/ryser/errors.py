"""Exception taxonomy shared by all modules."""


class RyserError(Exception):
    """Base class for errors raised by this package."""


class FormatError(RyserError):
    """A text input (HGF/CGF) is malformed."""


class PreconditionError(RyserError):
    """An operation's documented precondition does not hold for the input."""


class HypothesisViolation(RyserError):
    """A constructive cover came out incomplete.

    Raised with a diagnostic witness when an input that passed the cheap
    precondition checks turns out to breach a theorem hypothesis (broken
    transitivity, a pair below the color threshold, ...). Never returned
    silently.
    """
