"""Exception types shared across the package.

InputError covers anything a caller can fix (bad files, bad parameters,
violated preconditions); InternalError covers broken invariants that
indicate a bug or corrupted state. The CLI maps them to exit codes 1 and 2.
"""


class InputError(ValueError):
    """Caller-correctable problem: bad input data or parameters."""


class InternalError(RuntimeError):
    """Invariant violation inside the pipeline."""
