"""Package-wide exception types."""


class InvariantError(RuntimeError):
    """A mathematical invariant the library guarantees was observed to fail.

    This should never happen; it indicates a bug (or a falsified theorem)
    and is surfaced loudly rather than swallowed.
    """


class CeilingExceeded(RuntimeError):
    """A brute-force operation was asked to run beyond its configured ceiling.

    Raised instead of silently starting a computation that may take hours.
    """

    def __init__(self, m: int, ceiling: int, what: str):
        super().__init__(
            f"{what} for modulus {m} exceeds the ceiling {ceiling}; "
            f"raise the ceiling explicitly to proceed"
        )
        self.m = m
        self.ceiling = ceiling
        self.what = what
