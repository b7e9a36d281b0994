import pytest

from equiareal.elliptic import curve_from_solution, family_points
from equiareal.heights import HeightContext
from equiareal.octic import sol1
from equiareal.suites import e2_data


@pytest.fixture(scope="session")
def e2():
    return e2_data()


@pytest.fixture(scope="session")
def e2_ctx(e2):
    return HeightContext(e2[0])


@pytest.fixture(scope="session")
def t4():
    curve, pts = curve_from_solution(sol1(4))
    return curve, pts


@pytest.fixture(scope="session")
def t4_ctx(t4):
    return HeightContext(t4[0])


@pytest.fixture(scope="session")
def e1():
    pts = family_points(1)
    return pts[0].curve, pts


@pytest.fixture(scope="session")
def printed_points(e2, t4):
    _, P, G = e2
    return [(e2[0], p) for p in P + G] + [(t4[0], p) for p in t4[1]]


def pytest_terminal_summary(terminalreporter):
    from acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n].line())
