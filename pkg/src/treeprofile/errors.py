"""Exception hierarchy.

Every error raised by the library derives from :class:`TreeProfileError`.
The CLI maps :class:`InfeasibleRequest` subclasses to exit code 2 and the
remaining ones to exit code 1.
"""


class TreeProfileError(ValueError):
    pass


class InvalidTree(TreeProfileError):
    pass


class CycleDetected(InvalidTree):
    pass


class Disconnected(InvalidTree):
    pass


class InvalidIndex(TreeProfileError):
    pass


class DuplicateEdge(InvalidTree):
    pass


class LengthMismatch(TreeProfileError):
    pass


class TooSmall(TreeProfileError):
    pass


class KTooSmall(TreeProfileError):
    pass


class SizeMismatch(TreeProfileError):
    pass


class NotAnEdge(TreeProfileError):
    pass


class AInvalid(TreeProfileError):
    pass


class InvalidParam(TreeProfileError):
    pass


class HeightExceeded(TreeProfileError):
    pass


class NotApplicable(TreeProfileError):
    pass


class InfeasibleRequest(TreeProfileError):
    """The request is well-formed but cannot be served within limits."""


class KTooLarge(InfeasibleRequest):
    pass


class SizeCap(InfeasibleRequest):
    pass


class DegenerateProfile(InfeasibleRequest):
    pass


class CapExceeded(InfeasibleRequest):
    def __init__(self, cap, lower_bound, what="subtrees"):
        self.cap = cap
        self.lower_bound = lower_bound
        super().__init__(
            f"enumeration cap exceeded: {what} >= {lower_bound} > cap {cap}"
        )
