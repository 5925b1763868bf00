"""Exception taxonomy shared by the engines and the CLI."""


class ValidationError(ValueError):
    """Malformed input: bad partition data, mismatched weights, bad flags."""


class GuardError(ValueError):
    """Input is well-formed but exceeds a hard combinatorial-explosion guard."""
