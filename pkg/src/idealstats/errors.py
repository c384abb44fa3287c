"""Exception types shared across the package.

The CLI maps these to distinct exit codes, so validation failures and
range-guard failures must stay distinguishable.
"""


class ValidationError(ValueError):
    """An argument violates a documented precondition."""


class OverflowGuardError(OverflowError):
    """A bound exceeds the documented safe range for exact integer work."""
