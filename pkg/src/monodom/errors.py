"""Exception hierarchy shared across the package."""


class MonodomError(Exception):
    """Base class for all errors raised by monodom."""


class TableMismatchError(MonodomError):
    """Two monomials from different variable tables were combined."""


class InvalidIdealError(MonodomError):
    """Input does not yield a valid monomial ideal (empty, unit, ...)."""


class UnknownVariableError(MonodomError):
    """A variable name is not present in the ambient table."""


class IdealSyntaxError(MonodomError):
    """Ideal text does not conform to the input grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class GuardExceeded(MonodomError):
    """A configured enumeration bound was exceeded; fail loudly, never truncate."""


class TaylorTooLarge(GuardExceeded):
    """Generator count too large for full 2^q complex construction."""

    def __init__(self, q: int, limit: int):
        super().__init__(f"refusing to build 2^{q} Taylor symbols (limit q <= {limit})")
        self.q = q
        self.limit = limit


class InternalInvariantError(MonodomError):
    """A structural invariant (d∘d = 0, multihomogeneity, ...) failed."""


class FuzzFailure(MonodomError):
    """A fuzzed ideal violated a theorem check; carries a reproduction recipe."""

    def __init__(self, message: str, ideal_text: str, origin: str):
        super().__init__(f"{message}\n  ideal:  {ideal_text}\n  origin: {origin}")
        self.ideal_text = ideal_text
        self.origin = origin
