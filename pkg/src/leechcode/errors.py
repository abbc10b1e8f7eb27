"""Exception types for structural failures.

Every exception here signals that a constructed object violates an
invariant it is supposed to satisfy by design, never a bad user input.
"""


class VerificationError(Exception):
    """Base class: a computed structure contradicts its expected shape."""


class ConstructionError(VerificationError):
    """A from-scratch construction (Golay code, basis, ...) came out wrong."""


class LatticeValidationError(VerificationError):
    """A generated vector failed the lattice membership conditions."""


class DivisibilityError(VerificationError):
    """An inner product violated the required divisibility."""


class RankDeficiencyError(VerificationError):
    """Fewer independent rows than the required dimension."""


class ProjectivityError(VerificationError):
    """Two generator-matrix columns coincide, or a column is zero."""


class CounterOverflowError(VerificationError):
    """A histogram counter exceeded its certified width."""


class TableLookupError(VerificationError):
    """The image of a table entry under a map is not in the table."""
