"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range arguments."""


class CapacityError(RuntimeError):
    """A computation would exceed a configured enumeration or subset cap."""


class VerificationError(AssertionError):
    """A checked mathematical postcondition failed."""
