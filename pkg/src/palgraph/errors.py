"""Exception hierarchy for the palgraph engine."""


class PalgraphError(Exception):
    """Base class for all engine errors."""


class UsageError(PalgraphError):
    """Bad arguments or an invalid request at the public API / CLI boundary."""


class DataError(PalgraphError):
    """Rejected input data: out-of-range IDs, reserved types, malformed records."""


class CorruptionError(PalgraphError):
    """On-disk state is inconsistent: broken in-edge chain, bad magic, CRC mismatch."""


class StaleHandleError(PalgraphError):
    """An edge handle refers to a partition generation that has been replaced.

    Callers should re-run the query that produced the handle and retry.
    """


class CapacityError(PalgraphError):
    """A structural limit was hit (leaf partition overflow, ID space exhausted)."""
