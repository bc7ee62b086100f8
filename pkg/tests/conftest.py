from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from boxcalc.poly import Polynomial

settings.register_profile("default", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def polynomials(draw, max_degree=6):
    coeffs = draw(st.lists(rationals, max_size=max_degree + 1))
    return Polynomial(coeffs)


def frac(s) -> Fraction:
    return Fraction(s)


_ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)
