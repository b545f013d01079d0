from math import comb

import numpy as np
import pytest

from qmacdonald.contour import random_y
from qmacdonald.laurent import LaurentPoly
from qmacdonald.macdonald_op import solve_P
from qmacdonald.onerow import (
    PoleProximity,
    composition_count,
    composition_enumerate,
    corollary_P,
    residue_solution,
    residue_sum,
    theorem2_constant,
)
from qmacdonald.qfield import VFrac, VPoly, gauss_coeff, q, t
from qmacdonald.weyl import Partition, dominance_leq, is_invariant, orbit_monomial


def simple_pole_residue(i, branch, lam, n, k, qv, y):
    """Sum of residues of x**(lam-1)/prod_r (1 - r/x) at y_i**branch * q**m, all poles simple."""
    y = [complex(a) for a in y]
    poles = [a * qv**m for a in y + [1 / b for b in y] for m in range(k)]
    base = y[i] ** branch
    total = 0j
    for m in range(k):
        p = base * qv**m
        den = 1
        for r in poles:
            if abs(r - p) > 1e-14:
                den *= 1 - r / p
        total += p**lam / den
    return total


def test_composition_order_and_count():
    assert list(composition_enumerate(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(composition_enumerate(0, 3)) == [(0, 0, 0)]
    for total in range(5):
        for parts in range(1, 5):
            comps = list(composition_enumerate(total, parts))
            assert len(comps) == composition_count(total, parts) == comb(total + parts - 1, parts - 1)
            assert comps == sorted(comps)
            assert all(sum(c) == total for c in comps)
    with pytest.raises(ValueError):
        list(composition_enumerate(-1, 2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_small_lambda(n):
    assert corollary_P(0, n, 2) == LaurentPoly.one(n)
    assert corollary_P(1, n, 2) == orbit_monomial((1,), n)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lambda2_n1(k):
    P = corollary_P(2, 1, k)
    assert P == solve_P((2,), 1, k)
    assert P.coeff((0,)) == (1 + q()) * (1 - t(k)) / (1 - t(k) * q())


def test_rational_coefficient_example():
    P = corollary_P(2, 1, 2)
    c = P.coeff((0,))
    assert not c.is_polynomial()
    assert c == VFrac((1 + q()) ** 2, 1 + q() + q(2))


def test_k1_is_orbit_sum_of_complete_symmetric():
    # t = q: every weight is 1, so P is the complete homogeneous sum in y, 1/y
    P = corollary_P(2, 1, 1)
    assert P.is_polynomial()
    assert P.to_poly() == orbit_monomial((2,), 1) + LaurentPoly.one(1)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_symmetric_monic_lower_support(n, k):
    for lam in range(6):
        P = corollary_P(lam, n, k)
        assert is_invariant(P.numerator)
        top = (lam,) + (0,) * (n - 1)
        assert P.coeff(top) == 1
        for e in P.numerator.support():
            if all(a >= b for a, b in zip(e, e[1:])) and e[-1] >= 0:
                assert dominance_leq(Partition(e), Partition(top), n)


def test_theorem2_constant():
    assert theorem2_constant(0, 2, 2) == VFrac(1)
    assert theorem2_constant(1, 1, 2) == VFrac(1 - t(2), 1 - q())
    for k in (1, 2, 3):
        for lam in range(5):
            assert theorem2_constant(lam, 1, k) == VFrac(gauss_coeff(k, lam))
    with pytest.raises(ValueError):
        theorem2_constant(-1, 1, 1)


@pytest.mark.parametrize("n,k,lam", [(1, 1, 0), (1, 2, 3), (2, 2, 2), (2, 3, 1), (3, 2, 4)])
def test_residue_solution_matches_simple_residues(n, k, lam):
    rng = np.random.default_rng(11)
    qv = 0.37
    y = random_y(rng, n, k, qv)
    for i in range(n):
        for b in (1, -1):
            got = residue_solution(i, b, lam, n, k, qv, y)
            ref = simple_pole_residue(i, b, lam, n, k, qv, y)
            assert abs(got - ref) <= 1e-9 * max(1, abs(ref))


def test_minus_branch_is_inverted_plus_branch():
    y = (1.1 + 0.2j, 0.8 - 0.4j)
    yinv = (1 / y[0], y[1])
    for lam in range(4):
        a = residue_solution(0, -1, lam, 2, 2, 0.4, y)
        b = residue_solution(0, 1, lam, 2, 2, 0.4, yinv)
        assert abs(a - b) < 1e-12 * max(1, abs(a))


@pytest.mark.parametrize("n,k,lam", [(1, 1, 2), (1, 3, 3), (2, 2, 2), (2, 2, 4), (3, 1, 3), (3, 2, 2)])
def test_residue_sum_equals_normalized_P(n, k, lam):
    rng = np.random.default_rng(2024 + lam)
    const = theorem2_constant(lam, n, k)
    P = corollary_P(lam, n, k)
    for _ in range(20):
        qv = float(rng.uniform(0.2, 0.7))
        y = random_y(rng, n, k, qv)
        ref = const.evaluate_q(qv) * P.eval_numeric(qv, y)
        got = residue_sum(lam, n, k, qv, y)
        assert abs(got - ref) <= 1e-8 * max(1, abs(ref))


def test_pole_guard():
    with pytest.raises(PoleProximity):
        residue_solution(0, 1, 1, 2, 1, 0.5, (1.2, 1.2))
    with pytest.raises(ValueError):
        residue_solution(0, 2, 1, 1, 1, 0.5, (1.2,))
