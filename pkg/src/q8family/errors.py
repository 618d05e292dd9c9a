"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad user input (non-prime, trivial label, malformed flag value)."""


class InvariantError(RuntimeError):
    """An internal consistency check failed.

    These checks guard mathematical facts the construction relies on
    (group relations, orthogonality, integrality of multiplicities).
    If one fires the computation is wrong, not the input.
    """
