"""Exception types raised by the library."""


class LadderEllipseError(ValueError):
    """Base class for invalid-input errors."""


class InvalidEllipseError(LadderEllipseError):
    """The (c, d, cross) triple does not describe an axis-tangent ellipse."""


class DomainError(LadderEllipseError):
    """A function was evaluated outside its open domain."""


class DegenerateLineError(LadderEllipseError):
    """Restricting a conic to a line did not produce a quadratic."""


class DegenerateFactorError(LadderEllipseError):
    """A factor of the circle-case quartic lost its leading coefficient."""


class OutsideMedialTriangleError(LadderEllipseError):
    """A point is not strictly inside the medial triangle.

    ``inequality`` names the first violated strict inequality.
    """

    def __init__(self, inequality: str):
        super().__init__(f"center outside medial triangle: {inequality} does not hold")
        self.inequality = inequality
