"""Exception types shared across the package."""


class AsymtreeError(Exception):
    """Base class for every error raised by this package."""


class BadVertexId(AsymtreeError):
    ...


class DuplicateEdge(AsymtreeError):
    ...


class CycleDetected(AsymtreeError):
    ...


class DisconnectedInput(AsymtreeError):
    ...


class NotALeaf(AsymtreeError):
    ...


class SameVertex(AsymtreeError):
    ...


class TooSmall(AsymtreeError):
    ...


class TooLarge(AsymtreeError):
    ...


class OutOfRange(AsymtreeError):
    ...


class NotAsymmetric(AsymtreeError):
    ...


class TreeFormatError(AsymtreeError):
    """Malformed tree text file."""


class StuckNotAtE7(AsymtreeError):
    """A reduction reached a tree that is not E7 yet has no safe leaf.

    This would contradict the unique-minimal-element theorem, so the
    condition is reported loudly instead of being swallowed.
    """
