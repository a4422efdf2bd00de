"""U(1) gauge transformations acting on A_phi as piecewise-constant shifts.

An azimuthal phase S = exp(i c phi) changes A_phi by a constant; letting c
differ between polar sectors gives a (possibly singular) piecewise-constant
shift. Natural units hbar = c = 1 throughout, so the shift quantum for charge
e is 1/e.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import GaugeInvarianceViolation, SpecError
from .measures import mu_addit, mu_inv
from .piecewise import PI, Piece, PiecewiseField, _number, _reject_unknown, _snap

QUANT_TOL = 1e-9


@dataclass(frozen=True)
class ShiftInterval:
    lo: float
    hi: float
    value: float


@dataclass(frozen=True)
class GaugeShift:
    shifts: tuple[ShiftInterval, ...]
    quantization_unit: float | None = None
    label: str = ""

    def __post_init__(self):
        items = [ShiftInterval(_snap(s.lo), _snap(s.hi), float(s.value)) for s in self.shifts]
        if not items:
            raise ValueError("a shift needs at least one interval")
        if items[0].lo != 0.0 or items[-1].hi != PI:
            raise ValueError("shift intervals must start at 0 and end at pi")
        for s in items:
            if not s.lo < s.hi or not math.isfinite(s.value):
                raise ValueError(f"bad shift interval {s}")
        for a, b in zip(items, items[1:]):
            if abs(a.hi - b.lo) > 1e-12:
                raise ValueError(f"shift intervals must tile (0, pi); gap at {a.hi}/{b.lo}")
        seamed = [items[0]]
        for s in items[1:]:
            seamed.append(ShiftInterval(seamed[-1].hi, s.hi, s.value))
        object.__setattr__(self, "shifts", tuple(seamed))
        q = self.quantization_unit
        if q is not None:
            if not (q > 0 and math.isfinite(q)):
                raise ValueError("quantization_unit must be positive")
            for s in seamed:
                k = s.value / q
                if abs(k - round(k)) > QUANT_TOL:
                    raise ValueError(f"shift value {s.value} is not a multiple of {q}")

    @classmethod
    def uniform(cls, value: float, **kw) -> GaugeShift:
        return cls((ShiftInterval(0.0, PI, value),), **kw)

    @classmethod
    def from_breaks(cls, breaks: Sequence[float], values: Sequence[float], **kw) -> GaugeShift:
        edges = [0.0, *breaks, PI]
        if len(values) != len(edges) - 1:
            raise ValueError("need exactly one value per interval")
        return cls(tuple(ShiftInterval(a, b, v) for a, b, v in zip(edges, edges[1:], values)), **kw)

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return tuple(s.hi for s in self.shifts[:-1])

    def value_at(self, theta: float, side: str = "right") -> float:
        idx = np.searchsorted(self.breakpoints, theta, side="right" if side == "right" else "left")
        return self.shifts[int(idx)].value

    def negated(self) -> GaugeShift:
        return GaugeShift(tuple(ShiftInterval(s.lo, s.hi, -s.value) for s in self.shifts),
                          self.quantization_unit, f"-({self.label})" if self.label else "")

    def __add__(self, other: GaugeShift) -> GaugeShift:
        edges = sorted({0.0, PI, *self.breakpoints, *other.breakpoints})
        vals = []
        for a, b in zip(edges, edges[1:]):
            mid = 0.5 * (a + b)
            vals.append(self.value_at(mid) + other.value_at(mid))
        unit = self.quantization_unit if self.quantization_unit == other.quantization_unit else None
        return GaugeShift.from_breaks(edges[1:-1], vals, quantization_unit=unit)

    def as_field(self, charge_g: float = 1.0) -> PiecewiseField:
        from .piecewise import constant_field
        return constant_field([s.value for s in self.shifts], self.breakpoints, charge_g,
                              self.label or "shift")

    def describe(self) -> str:
        if self.label:
            return self.label
        vals = [f"{s.value:g}" for s in self.shifts]
        if len(vals) == 1:
            return f"uniform {vals[0]}"
        cuts = ", ".join(f"{b:.6g}" for b in self.breakpoints)
        return "{" + ", ".join(vals) + "} split at " + cuts

    def to_dict(self) -> dict:
        return {"quantization_unit": self.quantization_unit,
                "shifts": [{"lo": s.lo, "hi": s.hi, "value": s.value} for s in self.shifts]}

    @classmethod
    def from_dict(cls, data) -> GaugeShift:
        if not isinstance(data, dict):
            raise SpecError("$", "shift spec must be a JSON object")
        _reject_unknown(data, {"label", "quantization_unit", "shifts"}, "")
        q = data.get("quantization_unit")
        if q is not None:
            q = _number(data, "quantization_unit", "quantization_unit")
        raw = data.get("shifts")
        if not isinstance(raw, list) or not raw:
            raise SpecError("shifts", "expected a non-empty list")
        items = []
        for i, item in enumerate(raw):
            where = f"shifts[{i}]"
            if not isinstance(item, dict):
                raise SpecError(where, "expected an object")
            _reject_unknown(item, {"lo", "hi", "value"}, f"{where}.")
            items.append(ShiftInterval(_number(item, "lo", f"{where}.lo"),
                                       _number(item, "hi", f"{where}.hi"),
                                       _number(item, "value", f"{where}.value")))
        label = data.get("label", "")
        try:
            return cls(tuple(items), q, label if isinstance(label, str) else "")
        except ValueError as exc:
            raise SpecError("shifts", str(exc)) from None


def apply_shift(field: PiecewiseField, shift: GaugeShift) -> PiecewiseField:
    """Add the shift to A_phi on the common refinement of both partitions."""
    edges = sorted({0.0, PI, *field.breakpoints, *shift.breakpoints})
    pieces = []
    for a, b in zip(edges, edges[1:]):
        mid = 0.5 * (a + b)
        expr = field.pieces[field.piece_index(mid)].expr
        pieces.append(Piece(a, b, expr.shifted(shift.value_at(mid))))
    label = f"{field.label} + [{shift.describe()}]" if field.label else shift.describe()
    return PiecewiseField(tuple(pieces), field.charge_g, label)


@dataclass(frozen=True)
class InvarianceRow:
    shift_label: str
    mu_inv_before: float
    mu_inv_after: float
    mu_addit_before: float
    mu_addit_after: float

    @property
    def delta_mu_inv(self) -> float:
        return self.mu_inv_after - self.mu_inv_before

    @property
    def delta_mu_addit(self) -> float:
        return self.mu_addit_after - self.mu_addit_before


def invariance_tolerance(field: PiecewiseField) -> float:
    return 1e-12 * max(1.0, abs(field.charge_g))


def invariance_demo(field: PiecewiseField, shifts: Sequence[GaugeShift]) -> list[InvarianceRow]:
    """Both measures before and after each shift; mu_inv must not move."""
    before_inv, before_add = mu_inv(field), mu_addit(field)
    tol = invariance_tolerance(field)
    rows = []
    for shift in shifts:
        shifted = apply_shift(field, shift)
        row = InvarianceRow(shift.describe(), before_inv, mu_inv(shifted),
                            before_add, mu_addit(shifted))
        if abs(row.delta_mu_inv) > tol:
            raise GaugeInvarianceViolation(
                f"mu_inv moved by {row.delta_mu_inv:g} under {row.shift_label}")
        rows.append(row)
    return rows


@dataclass(frozen=True)
class QuantizationVerdict:
    """``n`` is 2eg, exact (integer-valued) when the condition holds."""

    n: Fraction
    satisfied: bool


def dirac_quantization_check(e: float, g: float) -> QuantizationVerdict:
    """Is 2eg an integer (within 1e-9)?"""
    if not e > 0:
        raise ValueError("electric charge e must be positive")
    two_eg = 2.0 * e * g
    k = round(two_eg)
    if abs(two_eg - k) <= QUANT_TOL:
        return QuantizationVerdict(Fraction(int(k)), True)
    return QuantizationVerdict(Fraction(two_eg).limit_denominator(10 ** 6), False)


def transition_phase(e: float, g: float, phi: float) -> complex:
    """Wave-function phase exp(2ieg*phi) relating the two Dirac charts."""
    return cmath.exp(2j * e * g * phi)
