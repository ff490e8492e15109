"""Exception types shared across the package.

Two channels are kept apart on purpose: ``InvariantViolation`` means a
cross-check that a theorem guarantees has failed (a bug, or a
counterexample), while ordinary ``ValueError`` subclasses flag bad input.
"""


class ArrangementError(ValueError):
    """Input does not describe a valid central essential arrangement."""

    def __init__(self, invariant, message):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class DimensionMismatchError(ValueError):
    pass


class PoleAtOriginError(ZeroDivisionError):
    pass


class PreconditionError(ValueError):
    pass


class InvalidBasepointError(ValueError):
    pass


class InvalidSpecError(ValueError):
    pass


class UnknownCatalogName(KeyError):
    pass


class GenericityFailure(RuntimeError):
    def __init__(self, message, seed):
        super().__init__(f"{message} (seed={seed})")
        self.seed = seed


class ConventionMismatch(RuntimeError):
    """A leading term is not the expected broken-circuit monomial."""


class InvariantViolation(AssertionError):
    """Two computations that must agree did not."""
