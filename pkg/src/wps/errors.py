"""Exception types shared across the package."""


class UsageError(ValueError):
    """A caller violated an operation's contract (mixed rings, order
    mismatch, non-homogeneous input, non-minimal resolution, ...)."""


class InputError(ValueError):
    """Unparseable or inconsistent user input (files, CLI flags)."""


class ResourceLimit(RuntimeError):
    """A computation exceeded its configured budget."""
