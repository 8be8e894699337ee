"""Exception types shared across the package.

The CLI maps these onto exit codes: bad or inconsistent input exits 1,
honest refusals to certify a value within the given caps exit 2.
"""


class SymdualError(Exception):
    """Base class for all package errors."""


class InvalidInput(SymdualError):
    """Malformed or inconsistent input (CLI exit code 1)."""


class CertificationError(SymdualError):
    """A requested value could not be certified within the caps (exit 2)."""


class CharMismatch(InvalidInput):
    """Operands carry different characteristics."""


class KindMismatch(InvalidInput):
    """Windowed classification contradicts the declared additivity kind."""


class ZeroPoint(InvalidInput):
    """All-zero coordinates do not define a projective point."""


class NonHomogeneous(InvalidInput):
    """A homogeneous polynomial was required."""


class DuplicatePoints(InvalidInput):
    """Point configurations must consist of pairwise distinct points."""


class CharZero(InvalidInput):
    """Operation only defined in positive characteristic."""


class Mismatch(InvalidInput):
    """Oracles being combined disagree on characteristic or variable count."""


class NotSquarefree(InvalidInput):
    """A squarefree monomial ideal was required."""


class UnknownTag(InvalidInput):
    """The verification tag does not name a known check group."""


class DimensionTooLarge(InvalidInput):
    """Polyhedron vertex enumeration is capped at 9 variables."""


class UncertifiedSup(CertificationError):
    """A sup/inf cannot be pinned down from the supplied window."""


class DegreeCapExceeded(CertificationError):
    """No nonzero piece was found up to the degree cap."""


class CapExceeded(CertificationError):
    """A scan hit its cap before the answer could be certified."""


class HypothesisUnmet(CertificationError):
    """Window evidence contradicts a hypothesis the computation relies on."""
