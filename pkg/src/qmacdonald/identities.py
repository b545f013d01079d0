"""Independent checks of the rational-function identities behind the eigen-relation.

Each check evaluates both sides at seeded random points and reports the
largest absolute discrepancy.  Where it is cheap, an exact mode clears
denominators with :func:`~qmacdonald.laurent.common_denominator_sum` and
compares numerators symbolically; the report flags any disagreement
between the two modes.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np

from .contour import operator_coefficient
from .laurent import Binomial, LaurentPoly, common_denominator_sum, expand_factors
from .macdonald_op import apply_E_direct, operator_terms
from .qfield import VPoly, gauss_coeff, q, t
from .weyl import signed_permutations

__all__ = [
    "IdentityReport",
    "lemma1_check",
    "lemma2_check",
    "poincare_checks",
    "poincare_as_printed_check",
    "qbinomial_check",
    "all_checks",
]

TOL = 1e-10
LIMIT_TOL = 1e-4
RESIDUE_TOL = 1e-5
# points where some denominator is smaller than this are redrawn
CONDITION_GUARD = 0.05


@dataclass
class IdentityReport:
    identity: str
    n: int
    k: int
    trials: int
    seed: int | None
    max_abs_diff: float
    passed: bool
    tolerance: float = TOL
    exact: bool | None = None
    ambiguous: bool = False
    witness: dict | None = field(default=None)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        ex = "" if self.exact is None else f" exact={self.exact}"
        return (f"{status} {self.identity} n={self.n} k={self.k} trials={self.trials} "
                f"seed={self.seed} max|diff|={self.max_abs_diff:.3e}{ex}")


def _finish(name, n, k, trials, seed, diffs, points, tol, exact=None):
    worst = int(np.argmax(diffs))
    max_diff = float(diffs[worst])
    numeric_ok = max_diff < tol
    witness = None
    if not numeric_ok:
        witness = {key: [complex(v).real if np.isreal(v) else str(complex(v)) for v in np.atleast_1d(val)]
                   for key, val in points[worst].items()}
    return IdentityReport(name, n, k, trials, seed, max_diff,
                          numeric_ok and exact is not False, tol, exact,
                          ambiguous=exact is not None and exact != numeric_ok, witness=witness)


def _sample(rng, n, k, denominators: Callable, with_x=False):
    while True:
        qv = float(rng.uniform(0.2, 0.8))
        y = rng.uniform(0.7, 1.4, n) * np.exp(2j * np.pi * rng.uniform(0, 1, n))
        x = None
        if with_x:
            x = complex(rng.uniform(0.5, 2.0) * np.exp(2j * np.pi * rng.uniform()))
        if np.min(np.abs(denominators(qv ** k, y, x))) >= CONDITION_GUARD:
            return qv, y, x


def _root_denoms(tq, y, x):
    vals = [1 - y ** 2, 1 - y ** -2]
    for i, j in itertools.combinations(range(len(y)), 2):
        for a, b in itertools.product((1, -1), repeat=2):
            vals.append(np.atleast_1d(1 - y[i] ** a * y[j] ** b))
    vals += [1 - y, 1 - 1 / y]
    if x is not None:
        vals += [1 - tq * y / x, 1 - tq / (y * x)]
    return np.concatenate([np.atleast_1d(v) for v in vals])


def _lemma1_lhs(n, k, qv, y):
    return sum(operator_coefficient(a, n, k, qv, y) for a in itertools.product((1, -1), repeat=n))


def _prod_one_plus_t(tq, upto):
    return float(np.prod([1 + tq ** i for i in range(1, upto + 1)]))


def _exact_t_poly(k, factors):
    out = VPoly(1)
    for f in factors:
        out = out * f
    return out


def lemma1_exact(n: int, k: int) -> bool:
    expected = _exact_t_poly(k, [1 + t(k, i) for i in range(1, n + 1)])
    return apply_E_direct(LaurentPoly.one(n), n, k) == LaurentPoly.constant(n, expected)


def lemma1_check(n: int, k: int, trials: int = 100, seed: int = 0, exact: bool | None = None) -> IdentityReport:
    """Sum over sign vectors of the operator coefficients equals ``prod_i (1 + t**i)``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    diffs, points = [], []
    for _ in range(trials):
        qv, y, _ = _sample(rng, n, k, _root_denoms)
        lhs = _lemma1_lhs(n, k, qv, y)
        rhs = _prod_one_plus_t(qv ** k, n)
        diffs.append(abs(lhs - rhs))
        points.append({"q": qv, "y": y})
    ex = lemma1_exact(n, k) if (exact or (exact is None and n <= 3)) else None
    return _finish("lemma1", n, k, trials, seed, np.array(diffs), points, TOL, ex)


def lemma1_inversion_residual(n: int, k: int, trials: int = 20, seed: int = 0) -> float:
    """Max change of the sign-vector coefficient sum under ``y_i -> 1/y_i`` for each ``i`` separately."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        qv, y, _ = _sample(rng, n, k, _root_denoms)
        base = _lemma1_lhs(n, k, qv, y)
        for i in range(n):
            y2 = y.copy()
            y2[i] = 1 / y2[i]
            worst = max(worst, abs(_lemma1_lhs(n, k, qv, y2) - base))
    return worst


def lemma2_lhs(n: int, k: int, qv: float, y, x) -> complex:
    tq = qv ** k
    total = 0j
    for a in itertools.product((1, -1), repeat=n):
        c = operator_coefficient(a, n, k, qv, y)
        for yi, s in zip(y, a):
            w = yi ** s
            c *= (1 - w / x) / (1 - tq * w / x)
        total += c
    return total


def lemma2_rhs(n: int, k: int, qv: float, y, x) -> complex:
    tq = qv ** k
    prod = 1 + 0j
    for yi in y:
        prod *= (1 - yi / x) * (1 - 1 / (yi * x)) / ((1 - tq * yi / x) * (1 - tq / (yi * x)))
    return _prod_one_plus_t(tq, n - 1) * (1 + tq ** n * prod)


def residue_at_ty1(n: int, k: int, qv: float, y) -> complex:
    """Closed form of the residue of the x-deformed coefficient sum (times ``dx/x``) at ``x = t y_1``."""
    tq = qv ** k
    y1 = y[0]
    val = tq ** (1 - n) * (1 - 1 / tq) * (1 - tq * y1 ** 2) / (1 - y1 ** 2)
    val *= _prod_one_plus_t(tq, n - 1)
    for yj in y[1:]:
        val *= (1 - tq * y1 * yj) * (1 - tq * y1 / yj) / ((1 - y1 * yj) * (1 - y1 / yj))
    return val


def _numeric_residue(f, pole, eps=1e-6):
    # (x - p) f(x) at x = p(1 ± eps), averaged: the O(eps) terms cancel.
    vals = [(xe - pole) * f(xe) for xe in (pole * (1 + eps), pole * (1 - eps))]
    return (vals[0] + vals[1]) / 2


def _lift(p: LaurentPoly, n_new: int) -> LaurentPoly:
    return LaurentPoly(n_new, {e + (0,) * (n_new - p.n): c for e, c in p.terms().items()})


def _rational_equal(lhs_terms, rhs_terms, n) -> bool:
    ln, ld = common_denominator_sum(lhs_terms, n)
    rn, rd = common_denominator_sum(rhs_terms, n)
    return ln * expand_factors(rd, n) == rn * expand_factors(ld, n)


def lemma2_exact(n: int, k: int) -> bool:
    m = n + 1  # last variable is x

    def vec(i, s):
        e = [0] * m
        e[i] = s
        e[n] = -1
        return tuple(e)

    lhs = []
    for term in operator_terms(n, k):
        num = _lift(term.numerator, m)
        den = [Binomial(b.y_exp + (0,), b.v_exp, b.scalar) for b in term.denominator]
        for i, s in enumerate(term.signs):
            num = num.mul_binomial(Binomial(vec(i, s)))
            den.append(Binomial(vec(i, s), 2 * k))
        lhs.append((num, den))
    pref = _exact_t_poly(k, [1 + t(k, i) for i in range(1, n)])
    rhs_den = [Binomial(vec(i, s), 2 * k) for i in range(n) for s in (1, -1)]
    rhs_num = LaurentPoly.one(m)
    for i in range(n):
        for s in (1, -1):
            rhs_num = rhs_num.mul_binomial(Binomial(vec(i, s)))
    rhs = [(LaurentPoly.constant(m, pref), []), (rhs_num.scale(pref * t(k, n)), rhs_den)]
    return _rational_equal(lhs, rhs, m)


def lemma2_check(n: int, k: int, trials: int = 100, seed: int = 0,
                 exact: bool | None = None) -> list[IdentityReport]:
    """The x-deformed coefficient-sum identity at random ``(x, y)``, its ``x -> oo`` limit, and its residue at ``x = t y_1``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    diffs, points = [], []
    lim_diffs, lim_points = [], []
    res_diffs, res_points = [], []
    for _ in range(trials):
        qv, y, x = _sample(rng, n, k, _root_denoms, with_x=True)
        diffs.append(abs(lemma2_lhs(n, k, qv, y, x) - lemma2_rhs(n, k, qv, y, x)))
        points.append({"q": qv, "y": y, "x": x})

        big = 1e6 * np.exp(2j * np.pi * rng.uniform())
        target = _prod_one_plus_t(qv ** k, n)
        lim_diffs.append(max(abs(lemma2_lhs(n, k, qv, y, big) - target),
                             abs(lemma2_rhs(n, k, qv, y, big) - target)))
        lim_points.append({"q": qv, "y": y, "x": big})

        pole = qv ** k * y[0]
        closed = residue_at_ty1(n, k, qv, y)
        lhs_res = _numeric_residue(lambda x: lemma2_lhs(n, k, qv, y, x) / x, pole)
        rhs_res = _numeric_residue(lambda x: lemma2_rhs(n, k, qv, y, x) / x, pole)
        scale = max(1.0, abs(closed))
        res_diffs.append(max(abs(lhs_res - closed), abs(rhs_res - closed)) / scale)
        res_points.append({"q": qv, "y": y})
    ex = lemma2_exact(n, k) if (exact or (exact is None and n <= 2)) else None
    return [
        _finish("lemma2", n, k, trials, seed, np.array(diffs), points, TOL, ex),
        _finish("lemma2_limit", n, k, trials, seed, np.array(lim_diffs), lim_points, LIMIT_TOL),
        _finish("lemma2_residue", n, k, trials, seed, np.array(res_diffs), res_points, RESIDUE_TOL),
    ]


def _act(w, e: Sequence[int]) -> tuple[int, ...]:
    perm, signs = w
    out = [0] * len(e)
    for i, (p, s) in enumerate(zip(perm, signs)):
        out[p] = s * e[i]
    return tuple(out)


def _poincare_c_roots(n, as_printed=False):
    # Full C_n positive system e_i - e_j, e_i + e_j, 2 e_i.  The as-printed
    # product keeps only e_i + e_j and e_i and is not W-summable to the
    # Poincare polynomial once n >= 2.
    roots = []
    for i, j in itertools.combinations(range(n), 2):
        e = [0] * n
        e[i] = e[j] = 1
        roots.append(tuple(e))
        if not as_printed:
            e = [0] * n
            e[i], e[j] = 1, -1
            roots.append(tuple(e))
    for i in range(n):
        e = [0] * n
        e[i] = 1 if as_printed else 2
        roots.append(tuple(e))
    return roots


def _poincare_a_roots(n):
    roots = []
    for i, j in itertools.combinations(range(n), 2):
        e = [0] * n
        e[i], e[j] = 1, -1
        roots.append(tuple(e))
    return roots


def _roots_for(kind, n):
    if kind == "C":
        return _poincare_c_roots(n)
    if kind == "C_as_printed":
        return _poincare_c_roots(n, as_printed=True)
    return _poincare_a_roots(n)


def _group(kind, n):
    if kind.startswith("C"):
        return list(signed_permutations(n))
    return [(p, (1,) * n) for p in itertools.permutations(range(n))]


def _poincare_rhs(kind, n, tq):
    step = 2 if kind.startswith("C") else 1
    return float(np.prod([(1 - tq ** (step * i)) / (1 - tq) for i in range(1, n + 1)]))


def _poincare_rhs_exact(kind, n, k) -> VPoly:
    out = VPoly(1)
    step = 2 if kind.startswith("C") else 1
    for i in range(1, n + 1):
        out = out * (1 - t(k, step * i)).exact_div(1 - t(k))
    return out


def poincare_exact(kind: str, n: int, k: int) -> bool:
    roots = _roots_for(kind, n)
    lhs = []
    for w in _group(kind, n):
        num = LaurentPoly.one(n)
        den = []
        for r in roots:
            wr = _act(w, r)
            num = num.mul_binomial(Binomial(wr, 2 * k))
            den.append(Binomial(wr))
        lhs.append((num, den))
    rhs = [(LaurentPoly.constant(n, _poincare_rhs_exact(kind, n, k)), [])]
    return _rational_equal(lhs, rhs, n)


def _poincare_check(kind, n, k, trials, seed, exact):
    roots = _roots_for(kind, n)
    group = _group(kind, n)
    rng = np.random.default_rng(seed)
    diffs, points = [], []
    for _ in range(trials):
        qv, y, _ = _sample(rng, n, k, _root_denoms)
        tq = qv ** k
        total = 0j
        for w in group:
            term = 1 + 0j
            for r in roots:
                m = np.prod(y ** np.array(_act(w, r)))
                term *= (1 - tq * m) / (1 - m)
            total += term
        diffs.append(abs(total - _poincare_rhs(kind, n, tq)))
        points.append({"q": qv, "y": y})
    ex = poincare_exact(kind, n, k) if (exact or (exact is None and n <= 3)) else None
    name = {"C": "poincare_C", "A": "poincare_A"}.get(kind, "poincare_C_as_printed")
    return _finish(name, n, k, trials, seed, np.array(diffs), points, TOL, ex)


def poincare_checks(n: int, k: int, trials: int = 100, seed: int = 0,
                    exact: bool | None = None) -> list[IdentityReport]:
    """Poincaré-series identities for W(C_n) and W(A_{n-1})."""
    if n > 4:
        raise ValueError("poincare_checks enumerates the group; n <= 4")
    return [_poincare_check("C", n, k, trials, seed, exact),
            _poincare_check("A", n, k, trials, seed, exact)]


def poincare_as_printed_check(n: int, k: int, trials: int = 100, seed: int = 0) -> IdentityReport:
    """The W(C_n) sum with only the ``1 - y_i y_j`` and ``1 - y_i`` factors.

    Diagnostic only: this truncated product does not sum to the Poincare
    polynomial for ``n >= 2``; the gating check is :func:`poincare_checks`.
    """
    return _poincare_check("C_as_printed", n, k, trials, seed, None)


def qbinomial_check(k: int, lambda_max: int) -> IdentityReport:
    """``sum_i gauss_coeff(k, i) z**i`` against ``prod_{m<k} 1/(1 - q**m z)``, exactly.

    The right side is expanded as a formal power series in ``z`` and
    truncated at degree ``lambda_max``.
    """
    series = [VPoly(1)] + [VPoly() for _ in range(lambda_max)]
    for m in range(k):
        geo = [q(m * j) for j in range(lambda_max + 1)]
        series = [sum((series[a] * geo[d - a] for a in range(d + 1)), VPoly()) for d in range(lambda_max + 1)]
    mismatches = [d for d in range(lambda_max + 1) if series[d] != gauss_coeff(k, d)]
    report = IdentityReport("qbinomial", 0, k, lambda_max + 1, None, float(len(mismatches)),
                            not mismatches, 0.0, exact=not mismatches)
    if mismatches:
        report.witness = {"degree": mismatches[0]}
    return report


def all_checks(n: int, k: int, trials: int = 100, seed: int = 0, lambda_max: int = 6) -> list[IdentityReport]:
    reports = [lemma1_check(n, k, trials, seed)]
    reports += lemma2_check(n, k, trials, seed)
    reports += poincare_checks(n, k, trials, seed)
    reports.append(qbinomial_check(k, lambda_max))
    return reports
