"""Exception types shared across the solvers."""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """A configured resource cap was exceeded.

    Carries the name and value of the cap that fired so callers (and the
    command line) can report which knob to raise.
    """

    def __init__(self, cap_name: str, cap_value: int, detail: str = ""):
        self.cap_name = cap_name
        self.cap_value = cap_value
        message = f"resource cap exceeded: {cap_name}={cap_value}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class StrategyInapplicableError(ValueError):
    """The requested strategy does not apply to the given position."""


class InvariantError(RuntimeError):
    """An internal invariant that should be unbreakable was violated."""
