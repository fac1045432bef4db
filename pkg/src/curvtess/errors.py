"""Exception hierarchy. Every error raised on purpose derives from CurvtessError."""


class CurvtessError(Exception):
    pass


class MalformedInput(CurvtessError, ValueError):
    """Unparseable or inconsistent rotation-system input."""


class NonSphericalEmbedding(CurvtessError, ValueError):
    """Rotation system whose Euler characteristic is not 2."""


class InvalidArgument(CurvtessError, ValueError):
    pass


class IncompletePattern(CurvtessError, ValueError):
    """Curvature or pattern requested at a boundary vertex of a patch."""


class NotNonnegativelyCurved(CurvtessError, ValueError):
    pass


class IncompatibleBoundaries(CurvtessError, ValueError):
    pass


class NonSimpleResult(CurvtessError, ValueError):
    """Gluing would create a multi-edge or loop."""


class NotPrismlikeStructure(CurvtessError):
    """A prism-like graph failed the band-structure checks."""


class UndefinedForFlat(CurvtessError, ValueError):
    """Operation requires positive total curvature."""


class TheoremViolation(CurvtessError):
    """An instance contradicts a proven bound; indicates a bug or bad input."""
