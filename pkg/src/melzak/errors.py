"""Exception types shared across the package.

All mathematical precondition violations raise one of these instead of a
bare ValueError so callers (service, CLI) can map them to exit codes and
HTTP statuses uniformly.
"""

from __future__ import annotations


class MelzakError(Exception):
    """Base class for all domain errors raised by this package."""


class PoleError(MelzakError):
    """A denominator vanished: the evaluation point hits a pole.

    Carries the offending value and a short description of where it was
    rejected (identity id, operation name).
    """

    def __init__(self, value, context: str = ""):
        self.value = value
        self.context = context
        where = f" in {context}" if context else ""
        super().__init__(f"pole at {value}{where}")


class DegreeError(MelzakError):
    """Polynomial degree exceeds what the closed form admits."""


class DistinctnessError(MelzakError):
    """Two parameters that must differ were equal (e.g. the two pole offsets)."""


class ZeroError(MelzakError):
    """An argument that must be nonzero was zero."""


class InternalError(MelzakError):
    """An internal consistency check failed; indicates a bug, never bad input."""
