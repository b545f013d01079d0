from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from qmacdonald.qfield import NotDivisible, VFrac, VPoly, eigenvalue_c, gauss_coeff, poch_finite, q, t, v

from conftest import V, sympy_to_vpoly, vpoly_to_sympy

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
vpolys = st.dictionaries(st.integers(-6, 6), coeffs, max_size=5).map(VPoly)


def test_poch_empty_product():
    assert poch_finite(q(), 0) == 1


def test_poch_q_2():
    assert poch_finite(q(), 2) == VPoly({0: 1, 2: -1, 4: -1, 6: 1})


def test_poch_t_k1_matches_q():
    assert poch_finite(t(1), 2) == poch_finite(q(), 2)


def test_poch_numeric_base():
    assert poch_finite(0.5, 3, 0.5) == pytest.approx((1 - 0.5) * (1 - 0.25) * (1 - 0.125))


@given(st.integers(0, 10), vpolys)
def test_poch_recurrence(m, a):
    assert poch_finite(a, m + 1) == poch_finite(a, m) * (1 - a * q(m))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_gauss_coeff_zero(k):
    assert gauss_coeff(k, 0) == 1


@pytest.mark.parametrize("i", range(8))
def test_gauss_coeff_k1(i):
    assert gauss_coeff(1, i) == 1


def test_gauss_coeff_2_2():
    assert gauss_coeff(2, 2) == VPoly({0: 1, 2: 1, 4: 1})


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("i", range(9))
def test_gauss_coeff_shape(k, i):
    g = gauss_coeff(k, i)
    assert all(isinstance(c, int) and c > 0 for _, c in g.items())
    assert g.max_exp == 2 * i * (k - 1)
    # independent oracle: sympy's Gaussian binomial [k-1+i, i]_q via q-factorials
    Q = sp.Symbol("Q")
    qfac = lambda m: sp.Mul(*[(1 - Q**j) for j in range(1, m + 1)])
    expected = sp.cancel(qfac(k - 1 + i) / (qfac(i) * qfac(k - 1)))
    assert sympy_to_vpoly(expected.subs(Q, V**2)) == g


def test_eigenvalue_zero_partition():
    for n in (1, 2, 3):
        for k in (1, 2):
            expected = VPoly(1)
            for i in range(1, n + 1):
                expected = expected * (1 + t(k, i))
            assert eigenvalue_c((0,) * n, n, k) == expected


@pytest.mark.parametrize("lam", range(7))
@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", range(1, 4))
def test_eigenvalue_one_row_factored(lam, n, k):
    factored = v(-lam) + v(lam) * t(k, n)
    for i in range(1, n):
        factored = factored * (1 + t(k, i))
    assert eigenvalue_c((lam,), n, k) == factored


def test_eigenvalue_1_1_1():
    # q^(-1/2) (1 + q * q) = v^-1 + v^3
    assert eigenvalue_c((1,), 1, 1) == VPoly({-1: 1, 3: 1})


def test_eigenvalue_rejects_long_partition():
    with pytest.raises(ValueError):
        eigenvalue_c((1, 1, 1), 2, 1)


@settings(max_examples=200)
@given(vpolys, vpolys, vpolys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == 0


@given(vpolys, vpolys)
def test_exact_div_roundtrip(a, b):
    if not b:
        return
    assert (a * b).exact_div(b) == a


def test_exact_div_remainder():
    with pytest.raises(NotDivisible):
        VPoly({0: 1, 2: 1}).exact_div(VPoly({0: 1, 1: 1}))


@given(vpolys, vpolys)
def test_gcd_divides(a, b):
    g = a.gcd(b)
    if a:
        a.exact_div(g)
    if b:
        b.exact_div(g)


def test_gcd_common_factor():
    f = VPoly({0: 1, 1: 1})
    a = f * VPoly({0: 2, 3: 1})
    b = f * VPoly({0: 1, 1: -1})
    assert a.gcd(b) == f


def test_vfrac_reduces_and_compares():
    a = VFrac(VPoly({0: 1, 2: -1}), VPoly({0: 1, 1: -1}))
    assert a.is_polynomial()
    assert a == VPoly({0: 1, 1: 1})
    assert VFrac(1, 3) + VFrac(2, 3) == 1
    assert VFrac(VPoly({0: 1}), VPoly({0: 1, 2: 1})) * VPoly({0: 1, 2: 1}) == 1


def test_vfrac_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        VFrac(1, 0)


def test_serialization_roundtrip():
    p = VPoly({-3: Fraction(-1, 2), 0: 4, 5: 1})
    data = p.to_json()
    assert data == [[-3, "-1/2"], [0, "4/1"], [5, "1/1"]]
    assert VPoly.from_json(data) == p


def test_sympy_bridge_consistency():
    p = VPoly({-1: 1, 3: Fraction(2, 3)})
    assert sympy_to_vpoly(vpoly_to_sympy(p)) == p


def test_str_uses_q_when_even():
    assert str(gauss_coeff(2, 2)) == "1 + q + q^2"
    assert str(eigenvalue_c((1,), 1, 1)) == "v^-1 + v^3"
