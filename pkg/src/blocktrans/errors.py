"""Shared exception types."""


class ValidationError(ValueError):
    """Malformed input: non-bijective images, degree mismatch, bad spec."""


class ResourceLimitError(RuntimeError):
    """A configured bound (degree, index, brute-force size) was exceeded."""


class AmbiguousBlocksError(RuntimeError):
    """More than one coarsest invariant block system exists."""


class UnsupportedError(RuntimeError):
    """Construction not available for these parameters."""


class SearchBudgetExceeded(RuntimeError):
    """Randomized search ran out of budget (distinct from nonexistence)."""
