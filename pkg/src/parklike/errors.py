"""Exception hierarchy for the parklike package.

Every error raised by the library derives from SpeciesError.  The CLI maps
ParseError/UnboundNameError to exit code 2 and everything else to exit 1.
"""


class SpeciesError(Exception):
    """Base class for all parklike errors."""


class ParseError(SpeciesError):
    """Syntax error in the species DSL; carries the character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnboundNameError(SpeciesError):
    """A Ref names a species that is not bound in the environment."""


class DivergentRecursionError(SpeciesError):
    """A recursive definition failed to reach a fixed point in the allowed rounds."""


class InadmissibleCompositionError(SpeciesError):
    """Partitional composition with an inner species that has structures on the empty set."""


class ChiTableExhaustedError(SpeciesError):
    """A table-backed chi map was evaluated beyond its last entry."""


class ChiNotIdentityError(SpeciesError):
    """The bijection only covers chi = Id; anything else is rejected."""


class BlockLengthMismatchError(SpeciesError):
    """A block-size vector does not have the length chi(n+1) required by the predicate."""


class InvalidStructureError(SpeciesError):
    """A structure value violates the invariants of its claimed species."""


class NonIntegralSeriesError(SpeciesError):
    """Exact-rational series arithmetic produced a non-integer structure count."""


class BudgetExceededError(SpeciesError):
    """A generation request exceeds the configured size budget."""
