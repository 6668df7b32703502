"""Exception hierarchy.

Every error carries a short machine-readable ``kind`` (e.g.
``"not-closed-under-union"``) and, where one exists, a ``witness`` tuple of
the objects that violate the rule.
"""


class PrimalTopError(ValueError):
    kind = "error"

    def __init__(self, message, kind=None, witness=()):
        super().__init__(message)
        if kind is not None:
            self.kind = kind
        self.witness = tuple(witness)


class UniverseError(PrimalTopError):
    kind = "bad-universe"


class UniverseMismatch(PrimalTopError):
    kind = "universe-mismatch"


class UniverseTooLarge(PrimalTopError):
    kind = "universe-too-large"


class UnknownPoint(PrimalTopError):
    kind = "unknown-point"


class TopologyAxiomError(PrimalTopError):
    """A family of subsets failed one of the open-set axioms."""


class PrimalAxiomError(PrimalTopError):
    """A family of subsets failed one of the primal conditions."""


class BaseError(PrimalTopError):
    kind = "base-does-not-cover"


class UnknownTheorem(PrimalTopError):
    kind = "unknown-theorem"


class DocumentError(PrimalTopError):
    """Malformed space document or report."""

    kind = "parse-error"


class InvariantBreach(PrimalTopError):
    """A result the theory guarantees did not hold; indicates a bug."""

    kind = "invariant-breach"
