"""Exceptions raised by the library."""


class CentralizerError(Exception):
    """Base class for all library errors."""


class UnclassifiableDiagram(CentralizerError):
    """A Cartan submatrix is not a finite-type Dynkin diagram."""


class ZeroRoot(CentralizerError, ValueError):
    """A coroot was requested for the zero vector."""


class NotInCell(CentralizerError, ValueError):
    """A weight vector lies outside the fundamental Weyl cell."""


class NotMinimalWeight(CentralizerError, ValueError):
    """A fundamental weight index is not a minimal weight."""


class ShapeMismatch(CentralizerError, ValueError):
    """A tuple or vector has the wrong length for its type."""


class EmptyInput(CentralizerError, ValueError):
    """An operation that needs at least one point got none."""


class CentralElement(CentralizerError, ValueError):
    """The point exponentiates to a central element, so C = G."""


class NotInRadical(CentralizerError, ValueError):
    """A vector does not lie in the radical subspace."""


class ClosureMismatch(CentralizerError):
    """The kernel elements do not close up into a group of the right size."""


class RankDeficient(CentralizerError):
    """A sublattice that should have full rank does not."""


class OracleDisagreement(CentralizerError):
    """Two independent computations of the kernel disagree."""
