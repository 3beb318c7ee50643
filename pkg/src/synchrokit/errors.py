"""Exception types shared across the toolkit."""


class ResourceLimitError(RuntimeError):
    """A search space or element set exceeded its configured cap."""

    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what}: {count} exceeds cap {cap}")
        self.what = what
        self.count = count
        self.cap = cap


class SolverTimeout(RuntimeError):
    """An exact graph solver ran out of time; carries the bounds it reached."""

    def __init__(self, what: str, lower: int, upper: int):
        super().__init__(f"{what} timed out with bounds [{lower}, {upper}]")
        self.what = what
        self.lower = lower
        self.upper = upper


class NotSynchronizingError(ValueError):
    pass
