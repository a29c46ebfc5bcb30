"""Exception types shared across the package."""


class MachhError(Exception):
    """Base class for all machh errors."""


class VertexOutOfRange(MachhError):
    """A vertex label falls outside 1..m."""


class GhostVertex(MachhError):
    """A ground-set vertex appears in no facet."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} appears in no facet")


class NotAVertex(MachhError):
    """A wedge point is not a vertex of its complex."""


class FaceAlreadyPresent(MachhError):
    """Attempt to glue a simplex that is already a face."""


class BoundaryMissing(MachhError):
    """A proper face of the glued simplex is absent."""

    def __init__(self, face_vertices: tuple):
        self.face_vertices = face_vertices
        super().__init__(f"boundary face {set(face_vertices)} missing")


class BadSigma(MachhError):
    """Invalid sigma for the gluing theorem checker."""


class NotApplicable(MachhError):
    """Theorem hypotheses do not hold for the given input."""


class NotInSubset(MachhError):
    """Sign lookup for a vertex outside the subset."""


class ResourceLimit(MachhError):
    """Input exceeds the configured size cap."""


class InternalInconsistency(MachhError):
    """A mathematically impossible state; indicates a bug."""
