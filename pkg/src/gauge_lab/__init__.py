"""Singularity measures of magnetic-monopole gauge potentials A_phi(theta)."""
from .cartesian import (AxisLimit, AxisProbeResult, CartesianGauge, CartesianKind,
                        axis_probe, closed_form_axis_limit, eval_potential)
from .errors import (BreakpointHit, DegenerateDirection, GaugeInvarianceViolation,
                     GaugeLabError, NoJumpHere, OnSingularSet, OutOfDomain, OutOfRange,
                     SpecError, UnsupportedExpr)
from .fourier import (DirichletCheck, FourierSeries, coefficients, dirichlet_check,
                      gibbs_overshoot, parseval_deficit, partial_sum)
from .gaugeops import (GaugeShift, QuantizationVerdict, ShiftInterval, apply_shift,
                       dirac_quantization_check, invariance_demo)
from .gauges import GaugeKind, SingularitySketch, make_gauge, sketch
from .measures import (MeasureReport, RegularityVerdict, Verdict, classify_regularity,
                       full_report, mu_addit, mu_inv)
from .piecewise import (PI, JumpRecord, Piece, PieceExpr, PiecewiseField,
                        check_dirichlet_conditions, discontinuities, endpoint_limits,
                        evaluate, one_sided_limit)

__version__ = "0.1.0"

__all__ = [
    "AxisLimit", "AxisProbeResult", "BreakpointHit", "CartesianGauge", "CartesianKind",
    "DegenerateDirection", "DirichletCheck", "FourierSeries", "GaugeInvarianceViolation",
    "GaugeKind", "GaugeLabError", "GaugeShift", "JumpRecord", "MeasureReport", "NoJumpHere",
    "OnSingularSet", "OutOfDomain", "OutOfRange", "PI", "Piece", "PieceExpr", "PiecewiseField",
    "QuantizationVerdict", "RegularityVerdict", "ShiftInterval", "SingularitySketch",
    "SpecError", "UnsupportedExpr", "Verdict", "apply_shift", "axis_probe",
    "check_dirichlet_conditions", "classify_regularity", "closed_form_axis_limit",
    "coefficients", "dirac_quantization_check", "dirichlet_check", "discontinuities",
    "endpoint_limits", "eval_potential", "evaluate", "full_report", "gibbs_overshoot",
    "invariance_demo", "make_gauge", "mu_addit", "mu_inv", "one_sided_limit",
    "parseval_deficit", "partial_sum", "sketch",
]
