"""SVG figures: a field over [0, pi] with its partial sums and one-sided limits."""
from __future__ import annotations

import io

import numpy as np

from .fourier import FourierSeries, partial_sum, theta_to_x
from .piecewise import PI, PiecewiseField, discontinuities, endpoint_limits

PLOT_SAMPLES = 2048


def _mpl():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    matplotlib.rcParams["svg.hashsalt"] = "gauge-lab"
    matplotlib.rcParams["svg.fonttype"] = "none"
    return plt


def field_svg(field: PiecewiseField, series: FourierSeries | None = None, ns=()) -> str:
    """Field (solid, broken at jumps) plus optional S_n overlays, as SVG text.

    Open circles mark one-sided limits at discontinuities, filled circles the
    endpoint limits f(0 + 0) and f(pi - 0).
    """
    plt = _mpl()
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for p in field.pieces:
        # endpoints excluded; each piece drawn separately so jumps stay open
        n_pts = max(8, int(PLOT_SAMPLES * (p.hi - p.lo) / PI))
        t = p.lo + (np.arange(n_pts) + 0.5) * ((p.hi - p.lo) / n_pts)
        ax.plot(t, p.expr(t), color="black", lw=1.6)
    if series is not None:
        theta = (np.arange(PLOT_SAMPLES) + 0.5) * (PI / PLOT_SAMPLES)
        x = theta_to_x(theta)
        for n in ns:
            ax.plot(theta, partial_sum(series, x, n), lw=0.8, label=f"S_{n}")
    for rec in discontinuities(field):
        if rec.is_endpoint:
            continue
        ax.plot([rec.location] * 2, [rec.left_limit, rec.right_limit], "o",
                mfc="white", mec="black", ms=5)
    f0, fpi = endpoint_limits(field)
    ax.plot([0.0, PI], [f0, fpi], "o", color="black", ms=4)
    ax.axhline(0.0, color="0.6", lw=0.5)
    ax.set_xlim(-0.05, PI + 0.05)
    ax.set_xticks([0, PI / 2, PI], ["0", "π/2", "π"])
    ax.set_xlabel("θ")
    ax.set_ylabel("A_φ")
    ax.set_title(field.label or "field")
    if series is not None and ns:
        ax.legend(loc="best", fontsize=8)
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None, "Creator": None})
    plt.close(fig)
    return buf.getvalue()
