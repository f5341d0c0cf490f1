"""Typed errors shared across the engine.

Scan pipelines and the command line filter on these types, so they must
stay distinct: a non-palindromic weight is a user input problem, not an
engine bug, and a work ceiling is neither.
"""


class LieFoldError(Exception):
    """Base class for all engine errors."""


class WeightParseError(LieFoldError):
    """Malformed weight text, or coordinates invalid for the requested family."""


class NotSelfdual(LieFoldError):
    """A weight that must be selfdual (palindromic on the SL side) is not."""


class MultiplicityOverflow(LieFoldError):
    """Multiplicities exceeded a fixed-width arithmetic limit.

    The engine computes with unbounded Python integers, so its own
    algorithms never raise this; the category exists so callers and the
    command line have a stable error class (and exit code) for overflow
    conditions in alternative arithmetic backends or serialized caches.
    """


class ResourceLimitExceeded(LieFoldError):
    """A table build or scan exceeded its configured work ceiling."""
