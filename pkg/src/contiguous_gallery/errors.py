"""Exception types shared across the package."""

from __future__ import annotations


class GalleryError(Exception):
    """Base class for every error raised by this package."""


class InputError(GalleryError):
    """The user supplied a document or value that cannot be accepted."""


class MalformedNumber(InputError):
    pass


class MalformedDocument(InputError):
    pass


class TooFewVertices(InputError):
    pass


class DuplicateConsecutiveVertex(InputError):
    pass


class NotSimple(InputError):
    def __init__(self, first: int, second: int):
        super().__init__(f"edges {first} and {second} intersect")
        self.edges = (first, second)


class DegenerateInput(GalleryError):
    pass


class PointOutsidePolygon(GalleryError):
    pass


class TargetNotOnBoundary(GalleryError):
    pass


class InconsistentInput(GalleryError):
    pass


class DegenerateTangency(GalleryError):
    pass


class CapExhausted(GalleryError):
    def __init__(self, message: str, state=None):
        super().__init__(message)
        self.state = state


class MalformedState(GalleryError):
    pass


class Uncoverable(GalleryError):
    pass


class GenerationFailed(GalleryError):
    pass
