"""Exception types shared across modules."""


class SizeLimitError(ValueError):
    """An input exceeds the documented size limit of an exhaustive routine."""
