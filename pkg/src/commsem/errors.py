"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Arguments violate a documented precondition."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed its documented size bound."""


class ConsistencyError(RuntimeError):
    """Two internal computation paths disagree.  Never expected."""
