"""Acceptance criteria, one test per criterion.

Each test appends a ``PASS``/``FAIL`` line to ``RESULTS``; the conftest hook
prints them after the run.  ``python tests/test_acceptance.py`` runs the same
checks without pytest.
"""

import time

import numpy as np

from qmacdonald.contour import PhiSpec, contour_integral, random_y, shift_identity_residual
from qmacdonald.identities import LIMIT_TOL, RESIDUE_TOL, TOL, lemma1_check, lemma2_check, poincare_checks, qbinomial_check
from qmacdonald.macdonald_op import apply_E, apply_E_direct, expand_in_monomials, solve_P
from qmacdonald.onerow import corollary_P, residue_sum, theorem2_constant
from qmacdonald.qfield import eigenvalue_c
from qmacdonald.weyl import dominance_leq, orbit_monomial, partitions_bounded

RESULTS: list[str] = []


def record(num, title, ok, detail, t0):
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title} ({detail}; {time.perf_counter() - t0:.2f}s)")
    assert ok, RESULTS[-1]


def _contour_specs(count=10, seed=20260):
    rng = np.random.default_rng(seed)
    lam, n, k, qv = 2, 2, 2, 0.3
    return [PhiSpec(lam, n, k, qv, random_y(rng, n, k, qv)) for _ in range(count)]


def test_criterion_1_exact_eigen_relation():
    t0 = time.perf_counter()
    bad, cases = [], 0
    for lam in range(5):
        for n in (1, 2, 3):
            for k in (1, 2):
                P = corollary_P(lam, n, k)
                c = eigenvalue_c((lam,), n, k)
                via_basis = apply_E(P, n, k)
                direct = apply_E_direct(P.numerator, n, k)
                cases += 1
                if via_basis != P.scale(c) or direct != P.numerator.scale(c):
                    bad.append((lam, n, k))
    record(1, "E P = c P exactly, lambda<=4 n<=3 k<=2", not bad,
           f"{cases} cases, both E routes, failures {bad}", t0)


def test_criterion_2_oracle_agreement():
    t0 = time.perf_counter()
    bad = [(lam, n, k) for lam in range(5) for n in (1, 2) for k in (1, 2)
           if corollary_P(lam, n, k) != solve_P((lam,), n, k)]
    record(2, "explicit sum equals triangular eigen-solve, lambda<=4 n<=2 k<=2", not bad,
           f"20 cases, failures {bad}", t0)


def test_criterion_3_normalization():
    t0 = time.perf_counter()
    specs = _contour_specs()
    P = corollary_P(2, 2, 2)
    const = theorem2_constant(2, 2, 2).evaluate_q(0.3)
    worst = max(abs(contour_integral(s) / P.eval_numeric(0.3, s.y) - const) / abs(const) for s in specs)
    record(3, "integral / P = (t;q)_2/(q;q)_2 at lambda=2 n=2 k=2 q=0.3", worst < 1e-8,
           f"{len(specs)} points, max rel err {worst:.2e}", t0)


def test_criterion_4_residue_sum():
    t0 = time.perf_counter()
    worst = 0.0
    for s in _contour_specs():
        I = contour_integral(s)
        worst = max(worst, abs(residue_sum(s.lam, s.n, s.k, s.q, s.y) - I) / abs(I))
    record(4, "sum of residue solutions equals the contour integral", worst < 1e-8,
           f"10 points, max rel err {worst:.2e}", t0)


def test_criterion_5_rational_identities():
    t0 = time.perf_counter()
    reports = []
    for n in (1, 2, 3):
        for k in (1, 2, 3):
            reports.append(lemma1_check(n, k, 100, seed=n * 10 + k))
            reports += lemma2_check(n, k, 100, seed=n * 10 + k)
            reports += poincare_checks(n, k, 100, seed=n * 10 + k)
    worst = {}
    for r in reports:
        worst[r.identity] = max(worst.get(r.identity, 0.0), r.max_abs_diff)
    failed = [str(r) for r in reports if not r.passed]
    detail = ", ".join(f"{name} {v:.1e}" for name, v in worst.items())
    record(5, f"lemmas and Poincare sums (tol {TOL:g}, limit {LIMIT_TOL:g}, residue {RESIDUE_TOL:g})",
           not failed, f"{len(reports)} reports x 100 trials, worst: {detail}; failures {failed}", t0)


def test_criterion_6_qbinomial():
    t0 = time.perf_counter()
    reports = [qbinomial_check(k, 6) for k in (1, 2, 3)]
    record(6, "Gaussian binomial generating function, k<=3 lambda<=6", all(r.passed for r in reports),
           "exact", t0)


def test_criterion_7_triangularity():
    t0 = time.perf_counter()
    bad, cases = [], 0
    for n in (1, 2, 3):
        for k in (1, 2):
            for mu in partitions_bounded(4, n):
                img = expand_in_monomials(apply_E(orbit_monomial(mu, n), n, k), n)
                cases += 1
                if not all(dominance_leq(nu, mu, n) for nu in img) or img.get(mu) != eigenvalue_c(mu, n, k):
                    bad.append((tuple(mu), n, k))
    record(7, "E m_mu is lower triangular with diagonal c_mu, |mu|<=4 n<=3 k<=2", not bad,
           f"{cases} cases, failures {bad}", t0)


def test_criterion_8_shift_identity():
    t0 = time.perf_counter()
    rng = np.random.default_rng(808)
    specs = []
    for lam, n, k in [(0, 1, 1), (1, 1, 2), (2, 2, 2), (3, 2, 1), (2, 3, 2), (4, 1, 3)]:
        qv = float(rng.uniform(0.2, 0.7))
        specs.append(PhiSpec(lam, n, k, qv, random_y(rng, n, k, qv)))
    worst = max(shift_identity_residual(s) for s in specs)
    s = specs[2]
    mods = sorted(abs(s.poles))
    control = shift_identity_residual(s, 0.5 * (mods[-1] + mods[-2]))
    record(8, "x -> x/q shift identity, with a radius-too-small negative control",
           worst < 1e-8 and control > 1e-8,
           f"{len(specs)} specs, max rel err {worst:.2e}, control residual {control:.2e}", t0)


def test_criterion_9_monic():
    t0 = time.perf_counter()
    bad = [(lam, n, k) for lam in range(7) for n in (1, 2, 3) for k in (1, 2, 3)
           if corollary_P(lam, n, k).coeff((lam,) + (0,) * (n - 1)) != 1]
    record(9, "coefficient of y_1^lambda is 1, lambda<=6 n<=3 k<=3", not bad, f"63 cases, failures {bad}", t0)


if __name__ == "__main__":
    import sys

    ok = True
    for name, fn in sorted((n, f) for n, f in globals().items() if n.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            ok = False
    print("\n".join(RESULTS))
    sys.exit(0 if ok else 1)
