"""gauge-lab command line.

Exit codes: 0 ok, 2 usage or malformed spec, 3 I/O failure, 4 axis probe
disagrees with the closed form, 5 a published value fails to reproduce,
6 mu_inv moved under a gauge shift (should be impossible).

All files of one command are rendered in memory first and then moved into
place together, so a failing run leaves no partial output.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import reproduce
from .cartesian import (CartesianGauge, CartesianKind, axis_probe,
                        closed_form_axis_limit)
from .errors import (DegenerateDirection, GaugeInvarianceViolation, OutOfRange,
                     SpecError)
from .fourier import (coefficient_table_csv, coefficients, dirichlet_check,
                      dirichlet_table_csv, parseval_deficit, sampled_curve_csv)
from .gaugeops import GaugeShift, apply_shift, invariance_demo
from .gauges import GaugeKind, make_gauge, sketch
from .measures import classify_regularity, full_report
from .piecewise import PiecewiseField, check_dirichlet_conditions

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_PROBE, EXIT_REPRODUCE, EXIT_INVARIANCE = 0, 2, 3, 4, 5, 6
FORMATS = ("csv", "json", "svg")
ORDER_TOL = 0.01
COEF_RTOL = 0.01


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# -- small helpers ------------------------------------------------------------

def _fmt(v: float, tol: float = 0.0) -> str:
    """Signed short form; values within ``tol`` of zero print as a bare 0."""
    return "0" if abs(v) <= tol else f"{v + 0.0:+g}"


def _in_g(v: float, g: float) -> str:
    if g == 0:
        return f"{v:g}"
    c = v / g
    if abs(c) < 1e-12:
        return "0"
    sign = "−" if c < 0 else "+"
    mag = abs(c)
    body = "g" if abs(mag - 1) < 1e-12 else f"{mag:g}g"
    return (sign if sign == "−" else "") + body


def _clean(obj):
    """Recursively turn numpy scalars/arrays into plain JSON values, -0.0 into 0.0."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (np.floating, float)):
        f = float(obj)
        return 0.0 if f == 0 else f
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def _dumps(obj) -> str:
    return json.dumps(_clean(obj), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _read_json(path: str, what: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {what} {path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_USAGE, f"{path}: $: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _load_field(args) -> tuple[PiecewiseField, str]:
    if (args.gauge is None) == (args.spec is None):
        raise CliError(EXIT_USAGE, "give exactly one of a catalog gauge name or --spec")
    if args.spec is not None:
        if args.g is not None:
            raise CliError(EXIT_USAGE, "--g applies to catalog gauges; a spec carries its own g")
        data = _read_json(args.spec, "field spec")
        try:
            field = PiecewiseField.from_dict(data)
        except SpecError as exc:
            raise CliError(EXIT_USAGE, f"{args.spec}: {exc}") from None
        return field, Path(args.spec).stem
    try:
        kind = GaugeKind.from_name(args.gauge)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    return make_gauge(kind, 1.0 if args.g is None else args.g), kind.value


def _formats(args) -> tuple[str, ...]:
    if not args.format:
        return FORMATS
    out = []
    for item in args.format:
        for f in item.split(","):
            f = f.strip()
            if f not in FORMATS:
                raise CliError(EXIT_USAGE, f"--format: unknown format {f!r}; use csv, json or svg")
            if f not in out:
                out.append(f)
    return tuple(out)


def _int_list(text: str, name: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise CliError(EXIT_USAGE, f"{name}: expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise CliError(EXIT_USAGE, f"{name}: empty list")
    return vals


def _vec3(text: str, name: str) -> np.ndarray:
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError:
        vals = []
    if len(vals) != 3 or not all(math.isfinite(v) for v in vals):
        raise CliError(EXIT_USAGE, f"{name}: expected three comma-separated numbers, got {text!r}")
    return np.array(vals)


def write_outputs(out_dir: str, files: dict[str, str]) -> list[Path]:
    """Write all files or none: temp files first, then rename each into place."""
    if not files:
        return []
    target = Path(out_dir)
    staged: list[tuple[str, Path]] = []
    try:
        target.mkdir(parents=True, exist_ok=True)
        for name in sorted(files):
            fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=target)
            staged.append((tmp, target / name))
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
                fh.write(files[name])
        for tmp, final in staged:
            os.replace(tmp, final)
    except OSError as exc:
        for tmp, _ in staged:
            try:
                os.unlink(tmp)
            except OSError:
                pass
        raise CliError(EXIT_IO, f"cannot write to {out_dir}: {exc.strerror or exc}") from None
    return [final for _, final in staged]


# -- commands -----------------------------------------------------------------

def _regularity_lines(field: PiecewiseField) -> tuple[list[str], dict]:
    plain = classify_regularity(field)
    lines = [f"Regular: {'yes' if plain.is_regular else 'no'}"]
    info = {"regular": plain.is_regular, "endpoint_limits": list(plain.endpoint_limits)}
    if all(p.expr.is_constant for p in field.pieces):
        # a pure gauge term: undo it with its own shift
        values = [p.expr.c_const for p in field.pieces]
        comp = GaugeShift.from_breaks(field.breakpoints, values)
        verdict = classify_regularity(field, comp)
        g = field.charge_g
        terms = [_in_g(-v, g) for v in values]
        text = terms[0] if len(set(terms)) == 1 else "{" + " | ".join(terms) + "}"
        lines.append(f"Regular(compensated by {text}): {'yes' if verdict.is_regular else 'no'}")
        info["compensated"] = {"by": [-v for v in values], "regular": verdict.is_regular}
    return lines, info


def cmd_analyze(args) -> tuple[str, dict[str, str], int]:
    field, stem = _load_field(args)
    formats = _formats(args)
    report = full_report(field)
    tol = field.jump_tolerance
    sk = sketch(field)
    dc = check_dirichlet_conditions(field)
    reg_lines, reg_info = _regularity_lines(field)

    out = [f"gauge: {field.label or stem}  (g = {field.charge_g:g})",
           f"mu_inv={_fmt(report.mu_inv, tol)}, mu_addit={_fmt(report.mu_addit, tol)}",
           "jumps:"]
    for c in report.contributions:
        r = c.record
        where = "pi~0 (identified endpoint)" if r.is_endpoint else f"{r.location:.12g}"
        out.append(f"  theta={where}: left={r.left_limit:+g} right={r.right_limit:+g} "
                   f"half-jump={c.signed_half_jump:+g}")
    out.append("singularity sketch:")
    out += [f"  {line}" for line in sk.lines()]
    out.append(f"Dirichlet conditions: {'satisfied' if dc.satisfied else 'violated'} "
               f"(bounded={dc.bounded}, piecewise continuous={dc.piecewise_continuous}, "
               f"piecewise monotone={dc.piecewise_monotone}, "
               f"{len(dc.monotone_segments)} monotone segments)")
    out += reg_lines

    files = {}
    if "json" in formats:
        payload = report.to_dict()
        payload.update({
            "field": field.to_dict(),
            "sketch": {"x3+": sk.positive_axis.label, "origin": sk.origin.label,
                       "x3-": sk.negative_axis.label},
            "dirichlet_conditions": {
                "satisfied": dc.satisfied, "bounded": dc.bounded,
                "piecewise_continuous": dc.piecewise_continuous,
                "piecewise_monotone": dc.piecewise_monotone,
                "segments": [[s.lo, s.hi, s.direction] for s in dc.monotone_segments]},
            "regularity": reg_info,
        })
        files[f"{stem}_analysis.json"] = _dumps(payload)
    if "csv" in formats:
        files[f"{stem}_jumps.csv"] = report.to_csv()
    if "svg" in formats:
        from .plots import field_svg
        files[f"{stem}_field.svg"] = field_svg(field)
    return "\n".join(out) + "\n", files, EXIT_OK


def cmd_fourier(args) -> tuple[str, dict[str, str], int]:
    field, stem = _load_field(args)
    formats = _formats(args)
    N = args.N
    if N < 1:
        raise CliError(EXIT_USAGE, "--N must be a positive integer")
    ns = _int_list(args.at, "--at") if args.at else sorted({n for n in (64, 512) if n < N} | {N})
    if any(n < 1 or n > N for n in ns):
        raise CliError(EXIT_USAGE, f"--at: every n must lie in 1..{N}")
    series = coefficients(field, N)
    rows = [(n, c) for n in ns for c in dirichlet_check(field, series, n)]
    deficit = parseval_deficit(field, series)

    out = [f"gauge: {field.label or stem}  (g = {field.charge_g:g}), N = {N}, x = 2θ − π",
           f"a0 = {series.a0 + 0.0:+.12g}"]
    for k in range(1, min(N, 4) + 1):
        out.append(f"a_{k} = {series.a[k - 1] + 0.0:+.12g}   b_{k} = {series.b[k - 1] + 0.0:+.12g}")
    out.append(f"Parseval deficit at N = {N}: {deficit:.3e}")
    out.append("Dirichlet midpoint check:")
    out.append(f"  {'n':>6} {'x0':>12} {'S_n(x0)':>14} {'midpoint':>14} {'error':>10}")
    for n, c in rows:
        out.append(f"  {n:>6} {c.point:>12.6f} {c.partial_sum_value + 0.0:>+14.8g} "
                   f"{c.midpoint_value + 0.0:>+14.8g} {c.error:>10.3e}")

    files = {}
    if "csv" in formats:
        files[f"{stem}_coefficients.csv"] = coefficient_table_csv(series)
        files[f"{stem}_curve.csv"] = sampled_curve_csv(field, series, ns)
        files[f"{stem}_dirichlet.csv"] = dirichlet_table_csv(rows)
    if "json" in formats:
        files[f"{stem}_fourier.json"] = _dumps({
            "N": N, "mapping": series.mapping, "a0": series.a0,
            "parseval_deficit": deficit,
            "dirichlet": [{"n": n, "x": c.point, "partial_sum": c.partial_sum_value,
                           "midpoint": c.midpoint_value, "error": c.error} for n, c in rows],
        })
    if "svg" in formats:
        from .plots import field_svg
        files[f"{stem}_fourier.svg"] = field_svg(field, series, ns)
    return "\n".join(out) + "\n", files, EXIT_OK


def _probe_agrees(probe, limit, g) -> tuple[bool, float, float]:
    order_err = abs(probe.divergence_order - limit.order)
    ref = float(np.linalg.norm(limit.coefficient))
    diff = float(np.linalg.norm(probe.coefficient - limit.coefficient))
    rel = diff / ref if ref > 0 else diff / max(1.0, abs(g))
    return order_err <= ORDER_TOL and rel <= COEF_RTOL, order_err, rel


def cmd_probe_axis(args) -> tuple[str, dict[str, str], int]:
    if args.spec is not None or args.gauge is None:
        raise CliError(EXIT_USAGE, "probe-axis needs a Cartesian gauge: schwinger, dirac-plus or dirac-minus")
    try:
        kind = CartesianKind(args.gauge)
    except ValueError:
        raise CliError(EXIT_USAGE, f"probe-axis: {args.gauge!r} has no Cartesian form; "
                                   "use schwinger, dirac-plus or dirac-minus") from None
    if args.m is None:
        raise CliError(EXIT_USAGE, "probe-axis needs --m m1,m2,m3")
    g = 1.0 if args.g is None else args.g
    m = _vec3(args.m, "--m")
    gauge = CartesianGauge(kind, g)
    try:
        probe = axis_probe(gauge, args.z, m)
        limit = closed_form_axis_limit(gauge, args.z, m)
    except DegenerateDirection as exc:
        raise CliError(EXIT_USAGE, f"--m: {exc}") from None
    except ValueError as exc:
        raise CliError(EXIT_USAGE, f"--m: {exc}") from None
    ok, order_err, rel = _probe_agrees(probe, limit, g)

    def vec(v):
        return "(" + ", ".join(f"{c:+.6g}" for c in np.asarray(v)) + ")"

    out = [f"gauge: {kind.value}  g = {g:g}  approach r = {args.z:g}·e3 + eps·{vec(m)}",
           f"probe:       order {probe.divergence_order:.4f} (raw slope {probe.fitted_exponent:+.4f}), "
           f"coefficient {vec(probe.coefficient)}, amplitude {probe.amplitude:+.6g}",
           f"closed form: order {limit.order}, coefficient {vec(limit.coefficient)}, "
           f"amplitude {limit.amplitude:+.6g}",
           f"oracle match: {'yes' if ok else 'NO'} (order error {order_err:.2e}, "
           f"coefficient error {rel:.2e})"]
    files = {}
    stem = f"{kind.value}_axis"
    if "json" in _formats(args):
        files[f"{stem}.json"] = _dumps({
            "gauge": kind.value, "g": g, "z": args.z, "m": m,
            "probe": {"divergence_order": probe.divergence_order,
                      "fitted_exponent": probe.fitted_exponent,
                      "coefficient": probe.coefficient, "amplitude": probe.amplitude,
                      "direction_match": probe.direction_match,
                      "fit_residual": probe.fit_residual},
            "closed_form": {"order": limit.order, "coefficient": limit.coefficient,
                            "amplitude": limit.amplitude},
            "agree": ok,
        })
    return "\n".join(out) + "\n", files, (EXIT_OK if ok else EXIT_PROBE)


def cmd_gauge_transform(args) -> tuple[str, dict[str, str], int]:
    field, stem = _load_field(args)
    if args.shift is None:
        raise CliError(EXIT_USAGE, "gauge-transform needs --shift <path>")
    data = _read_json(args.shift, "shift spec")
    try:
        shift = GaugeShift.from_dict(data)
    except SpecError as exc:
        raise CliError(EXIT_USAGE, f"{args.shift}: {exc}") from None
    shifted = apply_shift(field, shift)
    try:
        (row,) = invariance_demo(field, [shift])
    except GaugeInvarianceViolation as exc:
        raise CliError(EXIT_INVARIANCE, str(exc)) from None
    tol = field.jump_tolerance
    out = [f"gauge: {field.label or stem}  shift: {shift.describe()}",
           f"before: mu_inv={_fmt(row.mu_inv_before, tol)}, mu_addit={_fmt(row.mu_addit_before, tol)}",
           f"after:  mu_inv={_fmt(row.mu_inv_after, tol)}, mu_addit={_fmt(row.mu_addit_after, tol)}",
           f"delta mu_inv = {row.delta_mu_inv:+.3e}, delta mu_addit = {row.delta_mu_addit:+g}"]
    formats = _formats(args)
    files = {}
    if "json" in formats:
        files[f"{stem}_shifted.json"] = _dumps(shifted.to_dict())
        files[f"{stem}_invariance.json"] = _dumps({
            "shift": shift.to_dict(),
            "mu_inv": [row.mu_inv_before, row.mu_inv_after],
            "mu_addit": [row.mu_addit_before, row.mu_addit_after]})
    if "csv" in formats:
        files[f"{stem}_shifted_jumps.csv"] = full_report(shifted).to_csv()
    if "svg" in formats:
        from .plots import field_svg
        files[f"{stem}_shifted.svg"] = field_svg(shifted)
    return "\n".join(out) + "\n", files, EXIT_OK


def cmd_reproduce(args) -> tuple[str, dict[str, str], int]:
    if args.gauge is not None or args.spec is not None:
        raise CliError(EXIT_USAGE, "reproduce-paper runs the whole catalog and takes no gauge")
    g = 1.0 if args.g is None else args.g
    if g == 0:
        raise CliError(EXIT_USAGE, "--g must be nonzero")
    rows = reproduce.build_rows(g)
    text = reproduce.to_text(rows) + reproduce.summary(rows) + "\n"
    files = {}
    formats = _formats(args)
    if "json" in formats:
        files["reproduction.json"] = reproduce.to_json(rows, g)
    if "csv" in formats:
        files["reproduction.txt"] = text
    return text, files, (EXIT_REPRODUCE if reproduce.failed(rows) else EXIT_OK)


COMMANDS = {
    "analyze": cmd_analyze,
    "fourier": cmd_fourier,
    "probe-axis": cmd_probe_axis,
    "gauge-transform": cmd_gauge_transform,
    "reproduce-paper": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("gauge", nargs="?", help="catalog gauge name")
    common.add_argument("--g", type=float, default=None, help="magnetic charge (default 1)")
    common.add_argument("--spec", help="JSON field spec instead of a catalog name")
    common.add_argument("--out", default=None,
                        help="output directory (default $GAUGE_LAB_OUT, else ./gauge_lab_out)")
    common.add_argument("--format", action="append",
                        help="csv, json and/or svg; repeat or comma-separate (default all)")

    parser = argparse.ArgumentParser(prog="gauge-lab",
                                     description="Singularity measures of monopole gauge potentials.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="jumps, measures, sketch, regularity")
    p = sub.add_parser("fourier", parents=[common], help="trigonometric series and midpoint checks")
    p.add_argument("--N", type=int, default=1024, help="number of modes (default 1024)")
    p.add_argument("--at", help="partial-sum orders, e.g. 64,512,4096")
    p = sub.add_parser("probe-axis", parents=[common], help="numerical limit of A near the x3-axis")
    p.add_argument("--z", type=float, default=0.0, help="axis point (default 0, the origin)")
    p.add_argument("--m", help="unit approach direction m1,m2,m3")
    p = sub.add_parser("gauge-transform", parents=[common], help="apply a piecewise-constant shift")
    p.add_argument("--shift", help="JSON shift spec")
    sub.add_parser("reproduce-paper", parents=[common], help="stated vs computed catalog values")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out_dir = args.out or os.environ.get("GAUGE_LAB_OUT") or "gauge_lab_out"
    try:
        text, files, code = COMMANDS[args.command](args)
        written = write_outputs(out_dir, files)
    except CliError as exc:
        print(f"gauge-lab: {exc}", file=sys.stderr)
        return exc.code
    except OutOfRange as exc:
        print(f"gauge-lab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    for path in written:
        print(f"wrote {path}")
    if code == EXIT_PROBE:
        print("gauge-lab: axis probe disagrees with the closed form", file=sys.stderr)
    elif code == EXIT_REPRODUCE:
        print("gauge-lab: some stated values did not reproduce", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
