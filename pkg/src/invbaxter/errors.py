"""Exception types shared across the package."""


class ContractError(ValueError):
    """An operation was called outside its precondition, or an internal
    consistency check failed."""


class FormatError(ValueError):
    """A serialized or encoded object is malformed."""


class CapacityError(RuntimeError):
    """An exhaustive enumeration would exceed its configured bound."""
