"""Exception types shared across the package.

Every failure mode carries a stable ``condition`` string (the class name
without the ``Error`` suffix) so that front ends can emit machine-readable
diagnostics without string-matching messages.
"""


class OrbicohError(Exception):
    """Base class for all package-specific errors."""

    condition = "Error"


class SingularMatrixError(OrbicohError):
    """A square integer matrix required to be nonsingular has determinant 0."""

    condition = "SingularMatrix"


class NonPrimitiveNormalError(OrbicohError):
    """A facet normal whose entries have a common divisor greater than 1."""

    condition = "NonPrimitiveNormal"


class UnboundedPolytopeError(OrbicohError):
    """The inequality system has a nontrivial recession cone."""

    condition = "UnboundedPolytope"


class RedundantFacetError(OrbicohError):
    """A facet inequality that is never uniquely tight on the polytope."""

    condition = "RedundantFacet"


class NotSimpleError(OrbicohError):
    """Some vertex lies on more facets than the dimension allows."""

    condition = "NotSimple"


class TorsionCokernelError(OrbicohError):
    """The transposed weight matrix has a nonfree cokernel."""

    condition = "TorsionCokernel"


class ShapeMismatchError(OrbicohError):
    """A per-vertex polynomial tuple uses variables outside its vertex."""

    condition = "ShapeMismatch"


class NotAFaceInclusionError(OrbicohError):
    """Pullback/pushforward requested between presentations that are not
    nested faces."""

    condition = "NotAFaceInclusion"


class UnlistedSectorError(OrbicohError):
    """A sector element that does not appear in the sector table."""

    condition = "UnlistedSector"


class ParseError(OrbicohError):
    """Malformed input text; ``line`` is 1-based when known."""

    condition = "ParseError"

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line
