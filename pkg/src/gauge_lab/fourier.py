"""Trigonometric series of piecewise fields, Dirichlet midpoints, Gibbs overshoot.

Fields live on theta in [0, pi]; the series is taken in x = 2*theta - pi on
[-pi, pi], so the identified endpoints theta = 0 ~ pi become the periodic
endpoint x = +-pi. Coefficients use the a0/2 convention:

    S_n(x) = a0/2 + sum_{k=1..n} a_k cos(kx) + b_k sin(kx)
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from ._trig import cos_sin_pi
from .errors import NoJumpHere, OutOfRange, UnsupportedExpr
from .piecewise import PI, PieceExpr, PiecewiseField, discontinuities

MAPPING = "x = 2*theta - pi"
GL_ORDER = 64
GL_K_PER_PANEL = 20  # modes per panel; 40 aliases on a length-pi piece

_CHUNK = 1 << 22  # max entries in a (points x modes) work array


@dataclass(frozen=True)
class FourierSeries:
    a0: float
    a: np.ndarray  # a[k-1] = a_k, k = 1..N
    b: np.ndarray
    N: int
    mapping: str = MAPPING

    def __post_init__(self):
        if len(self.a) != self.N or len(self.b) != self.N:
            raise ValueError("coefficient arrays must have length N")
        if not (np.all(np.isfinite(self.a)) and np.all(np.isfinite(self.b))
                and math.isfinite(self.a0)):
            raise ValueError("non-finite Fourier coefficient")


def theta_to_x(theta):
    return 2.0 * np.asarray(theta, dtype=float) - PI


def x_to_theta(x):
    return 0.5 * (np.asarray(x, dtype=float) + PI)


# -- analytic route -----------------------------------------------------------

def _cs(w, theta):
    # cos/sin of w*theta with w integer-valued: exact at multiples of pi/2
    return cos_sin_pi(np.asarray(w, dtype=float) * (theta / PI))


def _prim_trig(w, theta):
    """Antiderivatives of cos(w t), sin(w t), t cos(w t), t sin(w t), w > 0."""
    c, s = _cs(w, theta)
    return (s / w, -c / w, theta * s / w + c / w ** 2, -theta * c / w + s / w ** 2)


def _piece_moments(expr: PieceExpr, lo: float, hi: float, w: np.ndarray):
    """(int f cos(w t), int f sin(w t)) over [lo, hi] for integer w >= 2."""
    c0, c1, c2, c3 = expr.coefficients()
    ic = np.zeros_like(w, dtype=float)
    is_ = np.zeros_like(w, dtype=float)

    def span(fun, ww):
        hi_v, lo_v = fun(ww, hi), fun(ww, lo)
        return tuple(h - l for h, l in zip(hi_v, lo_v))

    C0, S0, C1, S1 = span(_prim_trig, w)
    ic += c0 * C0 + c1 * C1
    is_ += c0 * S0 + c1 * S1
    if c2 or c3:
        Cm, Sm, _, _ = span(_prim_trig, w - 1)
        Cp, Sp, _, _ = span(_prim_trig, w + 1)
        # product-to-sum: cos t cos wt, cos t sin wt, sin t cos wt, sin t sin wt
        ic += c2 * 0.5 * (Cm + Cp) + c3 * 0.5 * (Sp - Sm)
        is_ += c2 * 0.5 * (Sp + Sm) + c3 * 0.5 * (Cm - Cp)
    return ic, is_


def _piece_integral(expr: PieceExpr, lo: float, hi: float) -> float:
    c0, c1, c2, c3 = expr.coefficients()
    (chi, shi), (clo, slo) = _cs(1, hi), _cs(1, lo)
    return float(c0 * (hi - lo) + c1 * 0.5 * (hi * hi - lo * lo)
                 + c2 * (shi - slo) - c3 * (chi - clo))


def _check_expr(expr):
    if not isinstance(expr, PieceExpr):
        raise UnsupportedExpr(f"cannot integrate {type(expr).__name__}")


def _analytic(field: PiecewiseField, N: int):
    k = np.arange(1, N + 1)
    w = 2.0 * k
    ic = np.zeros(N)
    is_ = np.zeros(N)
    total = 0.0
    for p in field.pieces:
        _check_expr(p.expr)
        dc, ds = _piece_moments(p.expr, p.lo, p.hi, w)
        ic += dc
        is_ += ds
        total += _piece_integral(p.expr, p.lo, p.hi)
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    return 2.0 / PI * total, 2.0 / PI * sign * ic, 2.0 / PI * sign * is_


# -- Gauss-Legendre route -----------------------------------------------------

def _quadrature(field: PiecewiseField, N: int):
    nodes, weights = np.polynomial.legendre.leggauss(GL_ORDER)
    a = np.zeros(N)
    b = np.zeros(N)
    total = 0.0
    for p in field.pieces:
        _check_expr(p.expr)
        # a0 needs no subdivision: the integrand is smooth and non-oscillatory
        half = 0.5 * (p.hi - p.lo)
        t = p.lo + half * (nodes + 1.0)
        total += half * float(weights @ p.expr(t))
        for start in range(1, N + 1, GL_K_PER_PANEL):
            ks = np.arange(start, min(start + GL_K_PER_PANEL, N + 1))
            panels = math.ceil(ks[-1] / GL_K_PER_PANEL)
            edges = np.linspace(p.lo, p.hi, panels + 1)
            h = 0.5 * np.diff(edges)
            pts = (edges[:-1, None] + h[:, None] * (nodes[None, :] + 1.0)).ravel()
            wts = (h[:, None] * weights[None, :]).ravel()
            fw = p.expr(pts) * wts
            arg = np.outer(2.0 * ks, pts)
            a[ks - 1] += np.cos(arg) @ fw
            b[ks - 1] += np.sin(arg) @ fw
    k = np.arange(1, N + 1)
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    return 2.0 / PI * total, 2.0 / PI * sign * a, 2.0 / PI * sign * b


def coefficients(field: PiecewiseField, N: int, method: str = "analytic") -> FourierSeries:
    """Fourier coefficients of F(x) = f((x + pi)/2) on [-pi, pi]."""
    if int(N) != N or N < 1:
        raise OutOfRange(f"N must be a positive integer, got {N}")
    N = int(N)
    if method == "analytic":
        a0, a, b = _analytic(field, N)
    elif method == "quadrature":
        a0, a, b = _quadrature(field, N)
    else:
        raise ValueError(f"unknown method {method!r}")
    return FourierSeries(float(a0), a, b, N)


def partial_sum(series: FourierSeries, x, n: int):
    """S_n(x); scalar in, scalar out."""
    if int(n) != n or not 1 <= n <= series.N:
        raise OutOfRange(f"n must lie in 1..{series.N}, got {n}")
    n = int(n)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(np.abs(xs) > PI) or np.any(np.isnan(xs)):
        raise OutOfRange("x must lie in [-pi, pi]")
    k = np.arange(1, n + 1, dtype=float)
    a, b = series.a[:n], series.b[:n]
    out = np.empty(xs.shape)
    step = max(1, _CHUNK // n)
    for i in range(0, xs.size, step):
        u = np.outer(xs[i:i + step] / PI, k)
        c, s = cos_sin_pi(u)
        out[i:i + step] = 0.5 * series.a0 + c @ a + s @ b
    return float(out[0]) if np.ndim(x) == 0 else out


def field_at_x(field: PiecewiseField, x):
    """F(x) = f((x + pi)/2); at breakpoints the right-hand piece is used."""
    return field.sample(x_to_theta(x))


@dataclass(frozen=True)
class DirichletCheck:
    point: float
    partial_sum_value: float
    midpoint_value: float

    @property
    def error(self) -> float:
        return abs(self.partial_sum_value - self.midpoint_value)


def _jump_points(field: PiecewiseField):
    """(x, JumpRecord) for every discontinuity; the identified endpoint maps to x = pi."""
    return [(PI if r.is_endpoint else float(theta_to_x(r.location)), r)
            for r in discontinuities(field)]


def dirichlet_check(field: PiecewiseField, series: FourierSeries, n: int) -> list[DirichletCheck]:
    """Partial sum vs. the half-sum of one-sided limits at each discontinuity."""
    checks = []
    for x0, rec in _jump_points(field):
        mid = 0.5 * (rec.left_limit + rec.right_limit)
        checks.append(DirichletCheck(x0, partial_sum(series, x0, n), mid))
    return checks


def gibbs_overshoot(field: PiecewiseField, series: FourierSeries, n: int,
                    jump_location: float, samples: int = 512) -> float:
    """Peak overshoot of S_n past the one-sided value, divided by |jump|.

    Each side of the jump is scanned over a window of width 4*pi/n; on the
    side where F is larger the overshoot is S_n - F, on the other F - S_n.
    """
    if n < 64:
        raise OutOfRange("the overshoot lobe is only resolved for n >= 64")
    if n > series.N:
        raise OutOfRange(f"n must not exceed N = {series.N}")
    target = PI if abs(abs(jump_location) - PI) <= 1e-12 else jump_location
    match = [(x0, r) for x0, r in _jump_points(field) if abs(x0 - target) <= 1e-12]
    if not match:
        raise NoJumpHere(f"no discontinuity at x = {jump_location}")
    x0, rec = match[0]
    sgn = math.copysign(1.0, rec.signed_jump)
    width = 4.0 * PI / n

    def excess(offset, side):
        # offset in (0, width]; positions wrap across the periodic endpoint
        x = x0 + offset if side > 0 else x0 - offset
        if x > PI:
            x -= 2 * PI
        if x < -PI:
            x += 2 * PI
        d = partial_sum(series, x, n) - field_at_x(field, x)
        return sgn * d * side

    best = 0.0
    for side in (+1, -1):
        grid = np.linspace(width / samples, width, samples)
        xs = x0 + side * grid
        xs = np.where(xs > PI, xs - 2 * PI, xs)
        xs = np.where(xs < -PI, xs + 2 * PI, xs)
        vals = sgn * side * (partial_sum(series, xs, n) - field_at_x(field, xs))
        i = int(np.argmax(vals))
        lo = grid[max(i - 1, 0)]
        hi = grid[min(i + 1, samples - 1)]
        res = minimize_scalar(lambda t: -excess(t, side), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-12 * width})
        best = max(best, float(vals[i]), -float(res.fun))
    return best / rec.abs_jump


# -- Parseval -----------------------------------------------------------------

def _piece_square_integral(expr: PieceExpr, lo: float, hi: float) -> float:
    c0, c1, c2, c3 = expr.coefficients()

    def prim(t):
        c, s = math.cos(t), math.sin(t)
        s2 = math.sin(2 * t)
        return (c0 * c0 * t + c1 * c1 * t ** 3 / 3
                + c2 * c2 * (t / 2 + s2 / 4) + c3 * c3 * (t / 2 - s2 / 4)
                + c0 * c1 * t * t + 2 * c0 * c2 * s - 2 * c0 * c3 * c
                + 2 * c1 * c2 * (t * s + c) + 2 * c1 * c3 * (s - t * c)
                + c2 * c3 * s * s)

    return prim(hi) - prim(lo)


def mean_square(field: PiecewiseField) -> float:
    """(1/pi) * integral of F(x)**2 over [-pi, pi], exact per piece."""
    return 2.0 / PI * sum(_piece_square_integral(p.expr, p.lo, p.hi) for p in field.pieces)


def parseval_sum(series: FourierSeries, n: int | None = None) -> float:
    n = series.N if n is None else n
    return 0.5 * series.a0 ** 2 + float(np.sum(series.a[:n] ** 2) + np.sum(series.b[:n] ** 2))


def parseval_deficit(field: PiecewiseField, series: FourierSeries) -> float:
    return mean_square(field) - parseval_sum(series)


# -- tables -------------------------------------------------------------------

def coefficient_table_csv(series: FourierSeries) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "a_k", "b_k"])
    w.writerow([0, repr(series.a0 + 0.0), repr(0.0)])
    for k in range(1, series.N + 1):
        # + 0.0 folds a signed zero into 0.0
        w.writerow([k, repr(float(series.a[k - 1]) + 0.0), repr(float(series.b[k - 1]) + 0.0)])
    return buf.getvalue()


def sampled_curve(field: PiecewiseField, series: FourierSeries, ns, samples: int = 2048):
    """Uniform theta samples (cell centres, never on a breakpoint) with f and S_n."""
    theta = (np.arange(samples) + 0.5) * (PI / samples)
    x = theta_to_x(theta)
    f = field.sample(theta)
    sums = {n: partial_sum(series, x, n) for n in ns}
    return x, f, sums


def sampled_curve_csv(field: PiecewiseField, series: FourierSeries, ns, samples: int = 2048) -> str:
    x, f, sums = sampled_curve(field, series, ns, samples)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "f", *[f"S_{n}" for n in ns]])
    for i in range(len(x)):
        w.writerow([repr(float(x[i])), repr(float(f[i])),
                    *[repr(float(sums[n][i])) for n in ns]])
    return buf.getvalue()


def dirichlet_table_csv(rows) -> str:
    """rows: iterable of (n, DirichletCheck)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "x", "partial_sum", "midpoint", "error"])
    for n, c in rows:
        w.writerow([n, repr(c.point), repr(c.partial_sum_value), repr(c.midpoint_value),
                    repr(c.error)])
    return buf.getvalue()
