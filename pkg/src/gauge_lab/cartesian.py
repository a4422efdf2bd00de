"""Cartesian monopole potentials and their (0/0) behaviour on the x3-axis.

Near-axis evaluation uses cancellation-free forms of every denominator:
``r**2 - (r.n)**2`` is computed as ``|r x n|**2`` and ``r +- r.n`` is
rewritten as ``|r x n|**2 / (r -+ r.n)`` when the naive sum would cancel.
Without that, probes at eps = 1e-7 lose most of their significant digits.

Azimuthal directions: ``e_phi_rev(m) = sin(phi) e1 - cos(phi) e2`` is the
reversed convention that ``direction_match`` is measured against; it is the
negative of the standard unit vector ``e_phi_std = -sin(phi) e1 + cos(phi) e2``.  The
spherical component is recovered as ``A_phi = rho * (A . e_phi_std)``, which
gives g cos(theta) for Schwinger and g(cos(theta) -+ 1) for Dirac(+/-).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDirection, OnSingularSet

DEFAULT_EPS = tuple(np.geomspace(1e-1, 1e-7, 13))

# |r x n| below this fraction of |r| counts as "on the axis"
AXIS_TOL = 1e-12


class CartesianKind(enum.Enum):
    SCHWINGER = "schwinger"
    DIRAC_PLUS = "dirac-plus"
    DIRAC_MINUS = "dirac-minus"


@dataclass(frozen=True)
class CartesianGauge:
    kind: CartesianKind
    g: float = 1.0
    n: tuple[float, float, float] = (0.0, 0.0, 1.0)

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", CartesianKind(self.kind))
        n = tuple(float(c) for c in self.n)
        if len(n) != 3 or abs(math.sqrt(sum(c * c for c in n)) - 1.0) > 1e-12:
            raise ValueError(f"n must be a unit 3-vector, got {self.n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "g", float(self.g))


def _as_vec(v) -> np.ndarray:
    a = np.asarray(v, dtype=float)
    if a.shape != (3,) or not np.all(np.isfinite(a)):
        raise ValueError(f"expected a finite 3-vector, got {v!r}")
    return a


def eval_potential(gauge: CartesianGauge, r) -> np.ndarray:
    """Vector potential A(r); raises OnSingularSet on the gauge's string(s)."""
    r = _as_vec(r)
    n = np.asarray(gauge.n)
    rr = float(np.linalg.norm(r))
    rxn = np.cross(r, n)
    rho2 = float(rxn @ rxn)
    rn = float(r @ n)
    if rr == 0.0:
        raise OnSingularSet("the origin is singular for every monopole gauge")
    on_axis = rho2 < (AXIS_TOL * rr) ** 2
    g = gauge.g

    if gauge.kind is CartesianKind.SCHWINGER:
        if on_axis:
            raise OnSingularSet("Schwinger potential is (0/0) on the whole axis of n")
        return -g * rxn * rn / (rr * rho2)

    if gauge.kind is CartesianKind.DIRAC_PLUS:
        if on_axis and rn < 0:
            raise OnSingularSet("Dirac(+) string lies on the negative half-axis")
        s = rr + rn if rn >= 0 else rho2 / (rr - rn)
        return g * rxn / (rr * s)

    if on_axis and rn > 0:
        raise OnSingularSet("Dirac(-) string lies on the positive half-axis")
    s = rr - rn if rn <= 0 else rho2 / (rr + rn)
    return -g * rxn / (rr * s)


def azimuthal_reversed(m) -> np.ndarray:
    """sin(phi) e1 - cos(phi) e2, the reversed azimuthal direction of m."""
    m = _as_vec(m)
    phi = math.atan2(m[1], m[0])
    return np.array([math.sin(phi), -math.cos(phi), 0.0])


def azimuthal_std(r) -> np.ndarray:
    r = _as_vec(r)
    phi = math.atan2(r[1], r[0])
    return np.array([-math.sin(phi), math.cos(phi), 0.0])


def spherical_component(gauge: CartesianGauge, r) -> float:
    """A_phi = rho * (A . e_phi_std); comparable with the catalog fields when n = e3."""
    r = _as_vec(r)
    rho = math.hypot(r[0], r[1])
    return rho * float(eval_potential(gauge, r) @ azimuthal_std(r))


def _check_direction(m) -> np.ndarray:
    m = _as_vec(m)
    norm = float(np.linalg.norm(m))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"approach direction must be a unit vector, |m| = {norm}")
    if math.hypot(m[0], m[1]) < 1e-12:
        raise DegenerateDirection("approach along the x3-axis itself is undefined")
    return m


@dataclass(frozen=True)
class AxisProbeResult:
    """Numerical classification of A(z e3 + eps m) as eps -> 0.

    ``divergence_order`` is the fitted p of |A| ~ eps**-p clipped at 0 (a
    convergent potential does not diverge); ``fitted_exponent`` keeps the raw
    slope. ``coefficient`` is the extrapolated eps**q * A(eps) at eps = 0 with
    q the rounded order, i.e. the finite limit when q = 0.
    """

    divergence_order: float
    coefficient: np.ndarray
    direction_match: float
    fit_residual: float
    fitted_exponent: float
    amplitude: float


def _cosine(a: np.ndarray, b: np.ndarray) -> float:
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.clip(a @ b / (na * nb), -1.0, 1.0))


def reduced_amplitude(coefficient, m) -> float:
    """Spherical-style amplitude: sin(Theta) * (coefficient . e_phi_std(m))."""
    m = np.asarray(m, dtype=float)
    return math.hypot(m[0], m[1]) * float(np.asarray(coefficient) @ azimuthal_std(m))


def axis_probe(gauge: CartesianGauge, z: float, m, eps_schedule=None) -> AxisProbeResult:
    m = _check_direction(m)
    eps = np.asarray(DEFAULT_EPS if eps_schedule is None else eps_schedule, dtype=float)
    if eps.ndim != 1 or eps.size < 3 or np.any(eps <= 0) or np.any(np.diff(eps) >= 0):
        raise ValueError("eps_schedule must be >= 3 strictly decreasing positive values")
    base = np.array([0.0, 0.0, float(z)])
    A = np.array([eval_potential(gauge, base + e * m) for e in eps])
    mag = np.linalg.norm(A, axis=1)

    if np.all(mag == 0.0):
        coef = np.zeros(3)
        return AxisProbeResult(0.0, coef, 0.0, 0.0, 0.0, 0.0)

    x = np.log(eps)
    y = np.log(np.where(mag > 0, mag, np.finfo(float).tiny))
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    p = -float(slope)
    order = max(p, 0.0)
    q = int(round(order))

    # Richardson-style extrapolation of eps**q * A(eps) = c + d*eps over the
    # smaller half of the schedule, where higher-order terms are negligible
    tail = slice(eps.size // 2, None)
    scaled = A[tail] * eps[tail, None] ** q
    design = np.column_stack([np.ones_like(eps[tail]), eps[tail]])
    sol, *_ = np.linalg.lstsq(design, scaled, rcond=None)
    coef = sol[0]

    return AxisProbeResult(
        divergence_order=order,
        coefficient=coef,
        direction_match=_cosine(coef, azimuthal_reversed(m)),
        fit_residual=float(np.sqrt(np.mean(resid ** 2))),
        fitted_exponent=p,
        amplitude=reduced_amplitude(coef, m),
    )


@dataclass(frozen=True)
class AxisLimit:
    """Analytic leading term: |A| ~ coefficient / eps**order.

    ``amplitude`` is the spherical value of A_phi seen from direction m
    (g sgn z for Schwinger, -2g / 0 for Dirac(+) below / above, and the
    angular profile g cos(Theta) etc. at the origin).
    """

    order: int
    coefficient: np.ndarray
    amplitude: float


def _spherical_amplitude(kind: CartesianKind, g: float, z: float, m3: float) -> float:
    if kind is CartesianKind.SCHWINGER:
        return g * m3 if z == 0 else g * math.copysign(1.0, z)
    if kind is CartesianKind.DIRAC_PLUS:
        if z == 0:
            return g * (m3 - 1.0)
        return 0.0 if z > 0 else -2.0 * g
    if z == 0:
        return g * (m3 + 1.0)
    return 2.0 * g if z > 0 else 0.0


def closed_form_axis_limit(gauge: CartesianGauge, z: float, m) -> AxisLimit:
    """Leading behaviour of A(z e3 + eps m) from the analytic limits.

    Only n = +-e3 is supported. The vector coefficient is
    ``amplitude * (-m2, m1, 0) / (m1**2 + m2**2)``; its magnitude carries the
    1/sin(Theta) factor that the spherical amplitude omits.
    """
    m = _check_direction(m)
    n = np.asarray(gauge.n)
    if abs(abs(n[2]) - 1.0) > 1e-12:
        raise ValueError("closed forms exist only for n = +-e3")
    kind = gauge.kind
    if n[2] < 0:
        # flipping n swaps the two Dirac strings; Schwinger is even in n
        kind = {CartesianKind.DIRAC_PLUS: CartesianKind.DIRAC_MINUS,
                CartesianKind.DIRAC_MINUS: CartesianKind.DIRAC_PLUS}.get(kind, kind)
    amp = _spherical_amplitude(kind, gauge.g, float(z), float(m[2]))
    rho2 = m[0] ** 2 + m[1] ** 2
    if z != 0 and amp == 0.0:
        return AxisLimit(0, np.zeros(3), 0.0)
    coef = amp * np.array([-m[1], m[0], 0.0]) / rho2
    return AxisLimit(1, coef, amp)
