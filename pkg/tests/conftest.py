import sympy as sp
import pytest

from qmacdonald.laurent import LaurentPoly
from qmacdonald.qfield import VPoly

V = sp.Symbol("v")


def vpoly_to_sympy(p: VPoly):
    return sum((sp.Rational(str(c)) * V**e for e, c in p.items()), sp.Integer(0))


def sympy_to_vpoly(expr) -> VPoly:
    expr = sp.expand(expr)
    poly = sp.Poly(expr * V**200, V)
    from fractions import Fraction
    return VPoly({m[0] - 200: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


def laurent_to_sympy(p: LaurentPoly, ys):
    out = sp.Integer(0)
    for e, c in p.terms().items():
        mono = sp.Integer(1)
        for y, a in zip(ys, e):
            mono *= y**a
        out += vpoly_to_sympy(c) * mono
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in RESULTS:
        terminalreporter.write_line(line)


@pytest.fixture
def ysyms():
    return sp.symbols("y1:5")
