import numpy as np
import pytest
from hypothesis import strategies as st

from gauge_lab.gaugeops import GaugeShift
from gauge_lab.piecewise import PI, PieceExpr, PiecewiseField

# ---------------------------------------------------------------------------
# hypothesis strategies

coef = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False)
charges = st.sampled_from([0.5, 1.0, 2.0, -1.0, 0.3, -2.5])


@st.composite
def breaks(draw, max_breaks=4):
    """Sorted interior breakpoints, well separated from each other and the ends."""
    k = draw(st.integers(0, max_breaks))
    cells = draw(st.lists(st.integers(1, 99), min_size=k, max_size=k, unique=True))
    return [c * PI / 100 for c in sorted(cells)]


@st.composite
def fields(draw, max_breaks=4):
    b = draw(breaks(max_breaks))
    exprs = [PieceExpr(draw(coef), draw(coef), draw(coef), draw(coef)) for _ in range(len(b) + 1)]
    return PiecewiseField.from_breaks(b, exprs, draw(charges))


@st.composite
def shifts(draw, max_breaks=4):
    b = draw(breaks(max_breaks))
    vals = draw(st.lists(st.integers(-3, 3), min_size=len(b) + 1, max_size=len(b) + 1))
    unit = draw(st.sampled_from([0.5, 1.0, 2.0]))
    return GaugeShift.from_breaks(b, [v * unit for v in vals], quantization_unit=unit)


# ---------------------------------------------------------------------------
# numpy-RNG generators used by the large randomized suites

def random_field(rng: np.random.Generator, g: float, max_breaks: int = 4) -> PiecewiseField:
    k = int(rng.integers(0, max_breaks + 1))
    b = sorted(rng.choice(np.arange(1, 100), size=k, replace=False) * (PI / 100))
    exprs = [PieceExpr(*(g * rng.uniform(-3, 3, size=4))) for _ in range(k + 1)]
    return PiecewiseField.from_breaks(b, exprs, g)


def random_shift(rng: np.random.Generator, g: float, max_breaks: int = 4) -> GaugeShift:
    k = int(rng.integers(0, max_breaks + 1))
    b = sorted(rng.choice(np.arange(1, 100), size=k, replace=False) * (PI / 100))
    vals = rng.integers(-4, 5, size=k + 1) * abs(g) / 2
    return GaugeShift.from_breaks(b, list(vals))


def midpoints(field: PiecewiseField, per_piece: int = 7):
    """Interior sample angles strictly inside each piece."""
    out = []
    for p in field.pieces:
        out.extend(p.lo + (np.arange(per_piece) + 0.5) * (p.hi - p.lo) / per_piece)
    return np.array(out)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# ---------------------------------------------------------------------------
# acceptance summary: one line per criterion, printed after the run

ACCEPTANCE_LINES: dict[int, str] = {}


def record_acceptance(number: int, title: str, passed: bool, detail: str = "") -> None:
    mark = "PASS" if passed else "FAIL"
    line = f"[{mark}] criterion {number:>2}: {title}"
    if detail:
        line += f"  ({detail})"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])

