from fractions import Fraction

from hypothesis import strategies as st

from ffoc.exactring import ParamPoly, XPoly
from ffoc.operators import OpSeries

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def param_polys(draw, max_deg=2):
    return ParamPoly(draw(st.lists(small_q, max_size=max_deg + 1)))


@st.composite
def xpolys(draw, max_deg=4, max_a=2):
    return XPoly(draw(st.lists(param_polys(max_a), max_size=max_deg + 1)))


@st.composite
def op_series(draw, trunc=10, constant=True):
    coeffs = draw(st.lists(small_q if constant else param_polys(1), max_size=trunc + 1))
    return OpSeries(coeffs, trunc)


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12).map(Fraction)


# Acceptance outcomes, filled by test_acceptance and echoed at the end of the run.
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
