"""Shared exception types."""

from __future__ import annotations


class ConsistencyError(RuntimeError):
    """An internal cross-check failed.

    Raised when two independent routes to the same quantity disagree, or when
    a value that is provably an integer (or provably non-degenerate) fails to
    be one.  Seeing this exception means a bug, not bad user input.
    """
