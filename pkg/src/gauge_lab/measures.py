"""Invariant and additive singularity measures of an A_phi(theta) field."""
from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .piecewise import PI, JumpRecord, PiecewiseField, discontinuities, endpoint_limits

if TYPE_CHECKING:
    from .gaugeops import GaugeShift


@dataclass(frozen=True)
class Contribution:
    record: JumpRecord

    @property
    def signed_half_jump(self) -> float:
        return 0.5 * self.record.signed_jump

    @property
    def abs_half_jump(self) -> float:
        return 0.5 * self.record.abs_jump


@dataclass(frozen=True)
class MeasureReport:
    mu_inv: float
    mu_addit: float
    contributions: tuple[Contribution, ...]

    def to_dict(self) -> dict:
        return {
            "mu_inv": self.mu_inv,
            "mu_addit": self.mu_addit,
            "contributions": [
                {"location": c.record.location, "endpoint": c.record.is_endpoint,
                 "left": c.record.left_limit, "right": c.record.right_limit,
                 "signed_half": c.signed_half_jump, "abs_half": c.abs_half_jump}
                for c in self.contributions
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["location", "left", "right", "signed_half", "abs_half"])
        for c in self.contributions:
            r = c.record
            w.writerow([repr(r.location), repr(r.left_limit), repr(r.right_limit),
                        repr(c.signed_half_jump), repr(c.abs_half_jump)])
        return buf.getvalue()


def mu_inv(field: PiecewiseField) -> float:
    """Half the sum of signed jumps, identified endpoint included."""
    return sum(0.5 * r.signed_jump for r in discontinuities(field))


def mu_addit(field: PiecewiseField) -> float:
    """Half the sum of absolute jumps."""
    return sum(0.5 * r.abs_jump for r in discontinuities(field))


def full_report(field: PiecewiseField) -> MeasureReport:
    contribs = tuple(Contribution(r) for r in discontinuities(field))
    return MeasureReport(
        mu_inv=sum(c.signed_half_jump for c in contribs),
        mu_addit=sum(c.abs_half_jump for c in contribs),
        contributions=contribs,
    )


class Verdict(enum.Enum):
    REGULAR = "Regular"
    IRREGULAR = "Irregular"


@dataclass(frozen=True)
class RegularityVerdict:
    verdict: Verdict
    endpoint_limits: tuple[float, float]
    compensated: bool

    @property
    def is_regular(self) -> bool:
        return self.verdict is Verdict.REGULAR


def classify_regularity(field: PiecewiseField,
                        compensation: GaugeShift | None = None) -> RegularityVerdict:
    """Regular iff A_phi -> 0 at both ends of the axis.

    ``compensation`` is the shift previously applied to the potential; it is
    subtracted before the limits are tested, so
    ``classify_regularity(apply_shift(f, c), c) == classify_regularity(f)``.
    """
    f0, fpi = endpoint_limits(field)
    if compensation is not None:
        f0 -= compensation.value_at(0.0, "right")
        fpi -= compensation.value_at(PI, "left")
    tol = field.jump_tolerance
    ok = abs(f0) <= tol and abs(fpi) <= tol
    return RegularityVerdict(Verdict.REGULAR if ok else Verdict.IRREGULAR,
                             (f0, fpi), compensation is not None)

