from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from nctorus.crossed import CrossedElement, spec
from nctorus.scalar import Coefficient
from nctorus.torus import TorusElement

settings.register_profile("ci", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")

small_q = st.fractions(min_value=-3, max_value=3, max_denominator=6)


@st.composite
def coefficients(draw, terms=3):
    out = Coefficient.zero()
    for _ in range(draw(st.integers(0, terms))):
        r = draw(st.fractions(min_value=-4, max_value=4, max_denominator=5))
        k = draw(st.integers(0, 11))
        q = draw(small_q)
        out = out + Coefficient.zeta(k, q) * r
    return out


nonzero_coefficients = coefficients().filter(lambda c: not c.is_zero())

points = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


@st.composite
def torus_elements(draw, size=3):
    d = {}
    for _ in range(draw(st.integers(0, size))):
        d[draw(points)] = draw(coefficients(2))
    return TorusElement(d)


@st.composite
def crossed_elements(draw, gamma):
    sp = spec(gamma)
    ks = draw(st.lists(st.integers(0, sp.N - 1), max_size=2, unique=True))
    return CrossedElement(sp, {k: draw(torus_elements(2)) for k in ks})


# acceptance summary lines, printed once at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
