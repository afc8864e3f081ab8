"""Exception types shared across the package."""


class EquivelarError(Exception):
    """Base class for all errors raised by this package."""


class CycleTooShort(EquivelarError):
    """A face was given with fewer than 3 vertices."""

    def __init__(self, face):
        self.face = tuple(face)
        super().__init__(f"face {self.face} has fewer than 3 vertices")


class RepeatedVertexInCycle(EquivelarError):
    """A face repeats a vertex; faces must be simple cycles."""

    def __init__(self, face):
        self.face = tuple(face)
        super().__init__(f"face {self.face} repeats a vertex")


class DuplicateFace(EquivelarError):
    """Two input faces are equal up to rotation or reflection."""

    def __init__(self, face):
        self.face = tuple(face)
        super().__init__(f"face {self.face} duplicates an earlier face")


class IntersectionViolation(EquivelarError):
    """Two faces meet in more than a vertex or an edge.

    Carries the offending pair and their common vertices, so callers can
    report exactly where a collection stops being a polyhedral complex.
    """

    def __init__(self, face_a, face_b, shared_vertices):
        self.face_a = tuple(face_a)
        self.face_b = tuple(face_b)
        self.shared_vertices = tuple(sorted(shared_vertices))
        super().__init__(
            f"faces {self.face_a} and {self.face_b} intersect in "
            f"{self.shared_vertices}, which is not a vertex or a common edge"
        )


class UnknownVertex(EquivelarError):
    """A vertex id that does not occur in the complex."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")


class NotAManifold(EquivelarError):
    """An operation that needs every edge in exactly two faces was given
    something else."""


class NotAPolyhedralMap(EquivelarError):
    """Flag machinery was asked to run on a complex that is not a
    connected polyhedral 2-manifold."""


class InvalidCombination(EquivelarError):
    """No closed surface has the requested Euler characteristic and
    orientability."""


class InvalidParameters(EquivelarError):
    """Construction parameters outside the valid range."""


class BadResidueClass(EquivelarError):
    """The prime given to a permutation builder lies in the wrong residue
    class mod 4."""


class PPViolation(EquivelarError):
    """The permutation fails one of the three pattern conditions."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"permutation fails pattern conditions: {report}")
