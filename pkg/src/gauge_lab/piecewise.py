"""Piecewise-smooth functions on [0, pi] with theta = 0 and theta = pi identified.

Every piece is an exact closed form in span{1, theta, cos theta, sin theta},
so one-sided limits, derivatives and Fourier integrals are all analytic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .errors import BreakpointHit, OutOfDomain, SpecError

PI = math.pi

# snapping tolerance for user-supplied breakpoints (JSON round-off, 3.14159...)
_SNAP = 1e-12
_HIT = 4 * np.finfo(float).eps * PI

JUMP_RTOL = 1e-9


@dataclass(frozen=True)
class PieceExpr:
    """f(theta) = c_const + c_theta*theta + c_cos*cos(theta) + c_sin*sin(theta)."""

    c_const: float = 0.0
    c_theta: float = 0.0
    c_cos: float = 0.0
    c_sin: float = 0.0

    def __post_init__(self):
        for name in ("c_const", "c_theta", "c_cos", "c_sin"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
            object.__setattr__(self, name, v)

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = (self.c_const + self.c_theta * theta
               + self.c_cos * np.cos(theta) + self.c_sin * np.sin(theta))
        return float(out) if out.ndim == 0 else out

    def derivative(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = self.c_theta - self.c_cos * np.sin(theta) + self.c_sin * np.cos(theta)
        return float(out) if out.ndim == 0 else out

    def __add__(self, other: PieceExpr) -> PieceExpr:
        return PieceExpr(self.c_const + other.c_const, self.c_theta + other.c_theta,
                         self.c_cos + other.c_cos, self.c_sin + other.c_sin)

    def shifted(self, c: float) -> PieceExpr:
        return PieceExpr(self.c_const + c, self.c_theta, self.c_cos, self.c_sin)

    def scaled(self, lam: float) -> PieceExpr:
        return PieceExpr(lam * self.c_const, lam * self.c_theta,
                         lam * self.c_cos, lam * self.c_sin)

    @property
    def is_constant(self) -> bool:
        return self.c_theta == 0.0 and self.c_cos == 0.0 and self.c_sin == 0.0

    def coefficients(self) -> tuple[float, float, float, float]:
        return (self.c_const, self.c_theta, self.c_cos, self.c_sin)

    def render(self, unit: float = 1.0) -> str:
        """Human-readable text, coefficients divided by ``unit`` (usually g)."""
        if unit == 0:
            unit = 1.0
        terms = []
        for coef, sym in ((self.c_cos, "cos θ"), (self.c_sin, "sin θ"),
                          (self.c_theta, "θ"), (self.c_const, "")):
            c = coef / unit
            if c == 0:
                continue
            mag = abs(c)
            if sym and mag == 1:
                body = sym
            elif sym:
                body = f"{mag:g}·{sym}"
            else:
                body = f"{mag:g}"
            sign = "−" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        text = ("−" if first_sign == "−" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class Piece:
    lo: float
    hi: float
    expr: PieceExpr

    def __post_init__(self):
        if not (0.0 <= self.lo < self.hi <= PI):
            raise OutOfDomain(f"piece bounds must satisfy 0 <= lo < hi <= pi, got ({self.lo}, {self.hi})")


@dataclass(frozen=True)
class JumpRecord:
    """A discontinuity; location pi stands for the identified endpoint 0 ~ pi."""

    location: float
    left_limit: float
    right_limit: float

    @property
    def signed_jump(self) -> float:
        return self.right_limit - self.left_limit

    @property
    def abs_jump(self) -> float:
        return abs(self.signed_jump)

    @property
    def is_endpoint(self) -> bool:
        return self.location == PI


def _snap(v: float) -> float:
    if abs(v) <= _SNAP:
        return 0.0
    if abs(v - PI) <= _SNAP:
        return PI
    return float(v)


@dataclass(frozen=True)
class PiecewiseField:
    """Ordered pieces tiling (0, pi); ``charge_g`` sets the jump tolerance scale."""

    pieces: tuple[Piece, ...]
    charge_g: float = 1.0
    label: str = ""
    _breaks: tuple[float, ...] = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pieces = [Piece(_snap(p.lo), _snap(p.hi), p.expr) for p in self.pieces]
        if not pieces:
            raise ValueError("a field needs at least one piece")
        if pieces[0].lo != 0.0 or pieces[-1].hi != PI:
            raise ValueError("pieces must start at 0 and end at pi")
        for a, b in zip(pieces, pieces[1:]):
            if abs(a.hi - b.lo) > _SNAP:
                raise ValueError(f"gap or overlap between pieces at {a.hi} / {b.lo}")
        # neighbours share the exact float at every interior seam
        seamed = [pieces[0]]
        for p in pieces[1:]:
            seamed.append(Piece(seamed[-1].hi, p.hi, p.expr))
        merged = [seamed[0]]
        for p in seamed[1:]:
            if p.expr == merged[-1].expr:
                merged[-1] = Piece(merged[-1].lo, p.hi, p.expr)
            else:
                merged.append(p)
        object.__setattr__(self, "pieces", tuple(merged))
        object.__setattr__(self, "charge_g", float(self.charge_g))
        object.__setattr__(self, "_breaks", tuple(p.hi for p in merged[:-1]))

    @classmethod
    def from_breaks(cls, breaks: Sequence[float], exprs: Sequence[PieceExpr],
                    charge_g: float = 1.0, label: str = "") -> PiecewiseField:
        """Build from interior breakpoints and one expression per interval."""
        edges = [0.0, *breaks, PI]
        if len(exprs) != len(edges) - 1:
            raise ValueError("need exactly one expression per interval")
        return cls(tuple(Piece(a, b, e) for a, b, e in zip(edges, edges[1:], exprs)),
                   charge_g, label)

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """Interior breakpoints (strictly inside (0, pi))."""
        return self._breaks

    @property
    def jump_tolerance(self) -> float:
        return JUMP_RTOL * (abs(self.charge_g) if self.charge_g != 0 else 1.0)

    def piece_index(self, theta: float, side: str = "right") -> int:
        """Index of the piece adjacent to ``theta`` on the given side."""
        b = self._breaks
        if side == "right":
            return int(np.searchsorted(b, theta, side="right"))
        return int(np.searchsorted(b, theta, side="left"))

    def sample(self, theta):
        """Vectorised evaluation; breakpoints take the right-hand piece (no checks)."""
        theta = np.asarray(theta, dtype=float)
        idx = np.searchsorted(self._breaks, theta, side="right")
        out = np.empty_like(theta)
        for k, p in enumerate(self.pieces):
            mask = idx == k
            if np.any(mask):
                out[mask] = p.expr(theta[mask])
        return out

    def scaled(self, lam: float, label: str | None = None) -> PiecewiseField:
        return PiecewiseField(tuple(Piece(p.lo, p.hi, p.expr.scaled(lam)) for p in self.pieces),
                              lam * self.charge_g, self.label if label is None else label)

    # -- JSON field spec ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "g": self.charge_g,
            "pieces": [{"lo": p.lo, "hi": p.hi, "c_const": p.expr.c_const,
                        "c_theta": p.expr.c_theta, "c_cos": p.expr.c_cos,
                        "c_sin": p.expr.c_sin} for p in self.pieces],
        }

    @classmethod
    def from_dict(cls, data) -> PiecewiseField:
        if not isinstance(data, dict):
            raise SpecError("$", "field spec must be a JSON object")
        _reject_unknown(data, {"label", "g", "pieces"}, "")
        label = data.get("label", "")
        if not isinstance(label, str):
            raise SpecError("label", "expected a string")
        g = _number(data, "g", "g", default=1.0)
        raw = data.get("pieces")
        if not isinstance(raw, list) or not raw:
            raise SpecError("pieces", "expected a non-empty list")
        pieces = []
        for i, item in enumerate(raw):
            where = f"pieces[{i}]"
            if not isinstance(item, dict):
                raise SpecError(where, "expected an object")
            _reject_unknown(item, {"lo", "hi", "c_const", "c_theta", "c_cos", "c_sin"}, f"{where}.")
            lo = _number(item, "lo", f"{where}.lo")
            hi = _number(item, "hi", f"{where}.hi")
            coefs = [_number(item, k, f"{where}.{k}", default=0.0)
                     for k in ("c_const", "c_theta", "c_cos", "c_sin")]
            try:
                pieces.append(Piece(_snap(lo), _snap(hi), PieceExpr(*coefs)))
            except ValueError as exc:
                raise SpecError(where, str(exc)) from None
        try:
            return cls(tuple(pieces), g, label)
        except ValueError as exc:
            raise SpecError("pieces", str(exc)) from None


def _reject_unknown(obj: dict, allowed: set, prefix: str) -> None:
    extra = sorted(set(obj) - allowed)
    if extra:
        raise SpecError(f"{prefix}{extra[0]}", f"unknown key; expected one of {sorted(allowed)}")


def _number(obj: dict, key: str, path: str, default=None) -> float:
    if key not in obj:
        if default is None:
            raise SpecError(path, "missing required number")
        return default
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise SpecError(path, f"expected a finite number, got {v!r}")
    return float(v)


def evaluate(field: PiecewiseField, theta: float) -> float:
    """Value of the field at an interior, non-breakpoint angle."""
    if not (0.0 <= theta <= PI) or math.isnan(theta):
        raise OutOfDomain(f"theta={theta} outside [0, pi]")
    for b in (0.0, *field.breakpoints, PI):
        if abs(theta - b) <= _HIT:
            raise BreakpointHit(f"theta={theta} is a breakpoint; use one_sided_limit")
    return field.pieces[field.piece_index(theta)].expr(theta)


def one_sided_limit(field: PiecewiseField, theta0: float, side: str, wrap: bool = False) -> float:
    """Exact f(theta0 - 0) (side='left') or f(theta0 + 0) (side='right').

    With ``wrap=True`` the identified endpoint is crossed: the left limit at 0
    is f(pi - 0) and the right limit at pi is f(0 + 0).
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if not (0.0 <= theta0 <= PI):
        raise OutOfDomain(f"theta0={theta0} outside [0, pi]")
    if side == "left" and theta0 == 0.0:
        if not wrap:
            raise OutOfDomain("no left limit at 0 without endpoint wrap")
        theta0 = PI
    elif side == "right" and theta0 == PI:
        if not wrap:
            raise OutOfDomain("no right limit at pi without endpoint wrap")
        theta0 = 0.0
    return field.pieces[field.piece_index(theta0, side)].expr(theta0)


def endpoint_limits(field: PiecewiseField) -> tuple[float, float]:
    """(f(0 + 0), f(pi - 0))."""
    return field.pieces[0].expr(0.0), field.pieces[-1].expr(PI)


def discontinuities(field: PiecewiseField) -> list[JumpRecord]:
    """Interior jumps plus the identified-endpoint jump f(0+0) - f(pi-0), sorted."""
    tol = field.jump_tolerance
    out = []
    for left, right in zip(field.pieces, field.pieces[1:]):
        x = left.hi
        rec = JumpRecord(x, left.expr(x), right.expr(x))
        if rec.abs_jump > tol:
            out.append(rec)
    f0, fpi = endpoint_limits(field)
    rec = JumpRecord(PI, fpi, f0)
    if rec.abs_jump > tol:
        out.append(rec)
    return out


@dataclass(frozen=True)
class MonotoneSegment:
    lo: float
    hi: float
    direction: str  # "increasing" | "decreasing" | "constant"


@dataclass(frozen=True)
class DirichletConditions:
    bounded: bool
    piecewise_continuous: bool
    piecewise_monotone: bool
    monotone_segments: tuple[MonotoneSegment, ...]

    @property
    def satisfied(self) -> bool:
        return self.bounded and self.piecewise_continuous and self.piecewise_monotone


def derivative_roots(expr: PieceExpr, lo: float, hi: float) -> list[float]:
    """Sign changes of the derivative strictly inside (lo, hi), ascending.

    The derivative is c_theta + R*cos(theta + delta) with R = hypot(c_sin, c_cos),
    so its roots come from a single arccos.
    """
    R = math.hypot(expr.c_sin, expr.c_cos)
    if R == 0.0 or abs(expr.c_theta) >= R:
        # no root, or only tangential (double) roots without a sign change
        return []
    delta = math.atan2(expr.c_cos, expr.c_sin)
    base = math.acos(-expr.c_theta / R)
    roots = set()
    for s in (base, -base):
        t0 = s - delta
        m_lo = math.ceil((lo - t0) / (2 * PI)) - 1
        m_hi = math.floor((hi - t0) / (2 * PI)) + 1
        for m in range(m_lo, m_hi + 1):
            t = t0 + 2 * PI * m
            if lo < t < hi and not (math.isclose(t, lo, abs_tol=1e-14) or math.isclose(t, hi, abs_tol=1e-14)):
                roots.add(t)
    return sorted(roots)


def _direction(expr: PieceExpr, lo: float, hi: float) -> str:
    if expr.is_constant:
        return "constant"
    # no sign change inside, so the sign only vanishes at tangential roots;
    # the largest sampled slope decides it
    d = expr.derivative(np.linspace(lo, hi, 11)[1:-1])
    return "increasing" if d[np.argmax(np.abs(d))] > 0 else "decreasing"


def check_dirichlet_conditions(field: PiecewiseField) -> DirichletConditions:
    segments = []
    for p in field.pieces:
        edges = [p.lo, *derivative_roots(p.expr, p.lo, p.hi), p.hi]
        for a, b in zip(edges, edges[1:]):
            segments.append(MonotoneSegment(a, b, _direction(p.expr, a, b)))
    # finitely many pieces of bounded closed forms: bounded and piecewise
    # continuous by construction; finitely many derivative roots per piece.
    return DirichletConditions(True, True, True, tuple(segments))


def total_variation_closure(field: PiecewiseField) -> float:
    """Sum of smooth increments plus all signed jumps around the circle (should be 0)."""
    smooth = sum(p.expr(p.hi) - p.expr(p.lo) for p in field.pieces)
    jumps = sum(r.signed_jump for r in discontinuities(field))
    return smooth + jumps


def constant_field(values: Iterable[float], breaks: Sequence[float] = (),
                   charge_g: float = 1.0, label: str = "") -> PiecewiseField:
    return PiecewiseField.from_breaks(list(breaks), [PieceExpr(c_const=v) for v in values],
                                      charge_g, label)
