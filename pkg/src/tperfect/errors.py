"""Exception types shared across the library."""


class GraphInputError(ValueError):
    """Raised for malformed graph data: loops, duplicate edges, bad indices."""


class SizeGuardError(RuntimeError):
    """Raised when an exponential routine is asked to exceed its size guard."""


class InternalInvariantError(RuntimeError):
    """A structural invariant the algorithms rely on was violated.

    These surface as diagnostics, never as verdicts: if one fires, the
    computation is wrong, not the input.
    """


class NotClawFreeError(ValueError):
    """Input to a claw-free-only routine contains an induced claw.

    Carries the witness (centre vertex and the three pairwise non-adjacent
    leaves) so callers can report it.
    """

    def __init__(self, centre, leaves):
        self.centre = centre
        self.leaves = tuple(leaves)
        super().__init__(
            f"graph is not claw-free: centre {centre}, leaves {self.leaves}"
        )


def check(condition, message):
    """Assert a structural invariant; raises InternalInvariantError."""
    if not condition:
        raise InternalInvariantError(message)
