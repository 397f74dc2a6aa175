"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument falls outside an operation's domain."""


class BudgetExceededError(RuntimeError):
    """An enumeration or evaluation budget would be exceeded."""


class ConsistencyError(RuntimeError):
    """An internal exactness invariant failed; this always signals a bug."""
