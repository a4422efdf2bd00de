"""Exception hierarchy shared by every gauge_lab module."""


class GaugeLabError(Exception):
    """Base class for all library errors."""


class OutOfDomain(GaugeLabError, ValueError):
    """An angle lies outside [0, pi] or a one-sided limit is requested off the edge."""


class BreakpointHit(GaugeLabError, ValueError):
    """Point evaluation requested exactly at a breakpoint; use a one-sided limit."""


class OnSingularSet(GaugeLabError, ValueError):
    """A Cartesian potential was evaluated where its denominator vanishes."""


class DegenerateDirection(GaugeLabError, ValueError):
    """Axis approach direction is parallel to the x3-axis."""


class UnsupportedExpr(GaugeLabError, TypeError):
    """Expression outside the span{1, theta, cos, sin} basis."""


class OutOfRange(GaugeLabError, ValueError):
    """Series index or abscissa outside its admissible range."""


class NoJumpHere(GaugeLabError, ValueError):
    """Gibbs analysis requested at a point where the field is continuous."""


class SpecError(GaugeLabError, ValueError):
    """Malformed JSON field or shift specification.

    ``path`` names the offending JSON member, e.g. ``pieces[1].c_cos``.
    """

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path


class GaugeInvarianceViolation(GaugeLabError, RuntimeError):
    """mu_inv changed under a piecewise-constant shift (should never happen)."""
