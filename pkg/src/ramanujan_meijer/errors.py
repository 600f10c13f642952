"""Exception hierarchy shared by every numerical module."""


class NumericsError(Exception):
    """Base class for all evaluation failures raised by this package."""


class PoleError(NumericsError, ValueError):
    """Argument sits on (or within 1e-14 of) a pole of the gamma function."""


class ParameterDomain(NumericsError, ValueError):
    pass


class DivergentInput(NumericsError):
    """The requested series does not converge at the given argument."""


class NoConvergence(NumericsError):
    pass


class NumeratorPole(NumericsError):
    """A numerator gamma argument of a Fox-Wright term hit a pole."""


class ZeroArgument(NumericsError, ValueError):
    pass


class PoleCollision(NumericsError, ValueError):
    """Left and right pole families of a Meijer G spec coincide."""


class NoSeparatingLine(NumericsError):
    pass


class NoDecay(NumericsError):
    pass


class NotConverged(NumericsError):
    """Contour quadrature failed to settle within the allowed step halvings."""


class TruncationError(NumericsError):
    pass


class FitUnstable(NumericsError):
    pass


class UnboundedTheta(NumericsError):
    pass
