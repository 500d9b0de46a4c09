from hypothesis import HealthCheck, settings, strategies as st

from nsshuffle.qtfield import QT

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def laurent_polys(draw, max_terms=4, exp=(-2, 3), coef=(-4, 4)):
    n = draw(st.integers(0, max_terms))
    d = {}
    for _ in range(n):
        key = (draw(st.integers(*exp)), draw(st.integers(*exp)))
        c = draw(st.integers(*coef))
        if c:
            d[key] = c
    return QT(d)


@st.composite
def qts(draw):
    num = draw(laurent_polys())
    den = draw(laurent_polys(max_terms=3, exp=(0, 2)))
    if not den:
        den = QT(1)
    return num / den


# acceptance tests append their PASS/FAIL lines here; printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
