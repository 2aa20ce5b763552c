"""Exception types shared across the package."""


class StressfanError(Exception):
    """Base class for all library errors."""


class ZeroVector(StressfanError):
    """Primitive part of the zero vector requested."""


class DependentRays(StressfanError):
    """Lattice index of linearly dependent rows requested."""


class DegenerateEdge(StressfanError):
    """Edge direction vectors are linearly dependent."""


class SampleOnEdge(StressfanError):
    """Incidence sample point lies on the edge subspace."""


class DegenerateHull(StressfanError):
    """All framework points are collinear; no 2-dimensional hull."""


class FanInvalid(StressfanError):
    """Fan construction violated simpliciality or the wall condition."""


class NotAWall(StressfanError):
    """Cone is not a wall (does not lie in exactly two maximal cones)."""


class DegenerateFan(StressfanError):
    """Fan rays do not span the ambient space."""


class UnsupportedCodim(StressfanError):
    """Local fan requested for an edge whose quotient rank is not 2."""


class GenericityViolation(StressfanError):
    """Two incident faces of an edge project to parallel rays."""


class InvalidInput(StressfanError):
    """Input document fails schema validation; carries a field path."""

    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)
