"""Catalog of monopole gauge potentials A_phi(theta) as piecewise fields.

The monopole orientation is fixed to n = (0, 0, +1); arbitrary orientations
only exist for the Cartesian potentials in :mod:`gauge_lab.cartesian`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .piecewise import PI, PieceExpr, PiecewiseField, endpoint_limits


class GaugeKind(enum.Enum):
    SCHWINGER = "schwinger"
    DIRAC_PLUS = "dirac-plus"
    DIRAC_MINUS = "dirac-minus"
    WU_YANG = "wu-yang"
    ANTI_WU_YANG = "anti-wu-yang"
    VACUUM_WU_YANG = "vacuum-wy"
    VACUUM_DIRAC_PLUS_G = "vacuum-d-plus"
    VACUUM_DIRAC_MINUS_G = "vacuum-d-minus"

    @classmethod
    def from_name(cls, name: str) -> GaugeKind:
        try:
            return cls(name)
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown gauge {name!r}; choose one of: {names}") from None


# gauges whose A_phi carries the monopole flux (mu_inv = +g)
MONOPOLE_KINDS = (GaugeKind.SCHWINGER, GaugeKind.DIRAC_PLUS, GaugeKind.DIRAC_MINUS,
                  GaugeKind.WU_YANG, GaugeKind.ANTI_WU_YANG)
VACUUM_KINDS = (GaugeKind.VACUUM_WU_YANG, GaugeKind.VACUUM_DIRAC_PLUS_G,
                GaugeKind.VACUUM_DIRAC_MINUS_G)

_HALF = 0.5 * PI


def _cos_plus(g: float, c: float) -> PieceExpr:
    return PieceExpr(c_const=c * g, c_cos=g)


def make_gauge(kind: GaugeKind | str, g: float = 1.0) -> PiecewiseField:
    """Return the catalog field for ``kind`` at magnetic charge ``g``."""
    if isinstance(kind, str):
        kind = GaugeKind.from_name(kind)
    g = float(g)
    if kind is GaugeKind.SCHWINGER:
        return PiecewiseField.from_breaks([], [_cos_plus(g, 0)], g, kind.value)
    if kind is GaugeKind.DIRAC_PLUS:
        return PiecewiseField.from_breaks([], [_cos_plus(g, -1)], g, kind.value)
    if kind is GaugeKind.DIRAC_MINUS:
        return PiecewiseField.from_breaks([], [_cos_plus(g, +1)], g, kind.value)
    if kind is GaugeKind.WU_YANG:
        # northern chart is Dirac(+), southern chart Dirac(-)
        return PiecewiseField.from_breaks([_HALF], [_cos_plus(g, -1), _cos_plus(g, +1)],
                                          g, kind.value)
    if kind is GaugeKind.ANTI_WU_YANG:
        return PiecewiseField.from_breaks([_HALF], [_cos_plus(g, +1), _cos_plus(g, -1)],
                                          g, kind.value)
    if kind is GaugeKind.VACUUM_WU_YANG:
        return PiecewiseField.from_breaks([_HALF], [PieceExpr(-g), PieceExpr(g)], g, kind.value)
    if kind is GaugeKind.VACUUM_DIRAC_PLUS_G:
        return PiecewiseField.from_breaks([], [PieceExpr(g)], g, kind.value)
    if kind is GaugeKind.VACUUM_DIRAC_MINUS_G:
        return PiecewiseField.from_breaks([], [PieceExpr(-g)], g, kind.value)
    raise ValueError(f"unhandled gauge kind {kind}")


@dataclass(frozen=True)
class AxisTag:
    label: str
    value: float


@dataclass(frozen=True)
class SingularitySketch:
    """Descriptive picture of where and how strongly a gauge is singular."""

    positive_axis: AxisTag
    origin: AxisTag
    negative_axis: AxisTag

    def lines(self) -> list[str]:
        return [f"x3+ ~ {self.positive_axis.label}",
                f"0   ~ {self.origin.label}",
                f"x3- ~ {self.negative_axis.label}"]


def _axis_label(value: float, tol: float) -> str:
    if abs(value) <= tol:
        return "0"
    sign = "+" if value > 0 else "−"
    return f"({sign}2π)·{abs(value):g}"


def _origin_text(field: PiecewiseField) -> str:
    unit = field.charge_g if field.charge_g else 1.0
    parts = [p.expr.render(unit) for p in field.pieces]
    if len(parts) > 1:
        body = "{" + " | ".join(parts) + "}"
    elif " + " in parts[0] or " − " in parts[0]:
        body = f"({parts[0]})"
    else:
        body = parts[0]
    return f"(2π⊗π)·{body}"


def sketch(field: PiecewiseField) -> SingularitySketch:
    """Endpoint limits of A_phi tagged by their direction-counting labels.

    The origin value is f(0 + 0) for reference; the origin's real content is
    the whole angular profile, which the label renders as text.
    """
    f0, fpi = endpoint_limits(field)
    tol = field.jump_tolerance
    return SingularitySketch(
        positive_axis=AxisTag(_axis_label(f0, tol), f0),
        origin=AxisTag(_origin_text(field), f0),
        negative_axis=AxisTag(_axis_label(fpi, tol), fpi),
    )
