"""Laurent polynomials in ``y_1 .. y_n`` over :class:`~qmacdonald.qfield.VPoly`.

Terms are stored flat: the key of a term is ``(v_exp, e_1, ..., e_n)`` and
the value its rational coefficient.  Grouping by the ``y`` part recovers
the coefficient polynomial in ``v`` of each ``y``-monomial.  Variable
indices are 0-based throughout the Python API (``y_1`` is index 0).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .qfield import NotDivisible, VFrac, VPoly, _canon, _fmt_rational, _scalar

__all__ = [
    "LaurentPoly",
    "LaurentQuotient",
    "Binomial",
    "exact_divide",
    "expand_factors",
    "common_denominator_sum",
    "NotDivisible",
]


def _add_into(d: dict, key, c):
    s = d.get(key, 0) + c
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def _finish(d: dict) -> dict:
    return {k: _canon(c) for k, c in d.items()}


class LaurentPoly:
    """Element of ``Q[v, v^-1][y_1^±1, ..., y_n^±1]``.

    >>> y1 = LaurentPoly.variable(1, 0)
    >>> (1 - y1) * (1 + y1) == 1 - y1 * y1
    True
    """

    __slots__ = ("n", "_d")

    def __init__(self, n: int, terms: Mapping[Sequence[int], object] | None = None):
        """Build from a mapping ``y-exponent vector -> VPoly | rational``."""
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        d: dict = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not have length {n}")
            if isinstance(c, VPoly):
                for ve, a in c.items():
                    _add_into(d, (ve,) + exps, a)
            else:
                c = _scalar(c)
                if c:
                    _add_into(d, (0,) + exps, c)
        self._d = _finish(d)

    @classmethod
    def _raw(cls, n: int, d: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.n = n
        obj._d = d
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c=1) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    one = classmethod(lambda cls, n: cls.constant(n, 1))

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], coeff=1) -> "LaurentPoly":
        return cls(n, {tuple(exps): coeff})

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "LaurentPoly":
        e = [0] * n
        e[i] = power
        return cls(n, {tuple(e): 1})

    # -- inspection -------------------------------------------------------

    def flat_items(self):
        """Flat ``((v_exp, e_1..e_n), coeff)`` pairs, unordered."""
        return self._d.items()

    def terms(self) -> dict[tuple[int, ...], VPoly]:
        """Mapping ``y-exponent -> VPoly``, descending lexicographic order."""
        grouped: dict = {}
        for key, c in self._d.items():
            grouped.setdefault(key[1:], {})[key[0]] = c
        return {e: VPoly._raw(grouped[e]) for e in sorted(grouped, reverse=True)}

    def coeff(self, exps: Sequence[int]) -> VPoly:
        exps = tuple(exps)
        return VPoly._raw({k[0]: c for k, c in self._d.items() if k[1:] == exps})

    def support(self) -> set[tuple[int, ...]]:
        return {k[1:] for k in self._d}

    def __bool__(self):
        return bool(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def __len__(self):
        return len(self.support())

    def content(self) -> VPoly:
        """gcd of the ``v``-coefficients of all ``y``-monomials (normal form)."""
        g = VPoly()
        for c in self.terms().values():
            g = c.unit_normal()[1] if not g else g.gcd(c)
            if g.is_constant():
                break
        return g

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, VPoly) or (isinstance(other, (int, Fraction)) and not isinstance(other, bool)):
            return LaurentPoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._d)
        for k, c in other._d.items():
            _add_into(d, k, c)
        return LaurentPoly._raw(self.n, _finish(d))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.n, {k: -c for k, c in self._d.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict = {}
        get = d.get
        for k1, c1 in self._d.items():
            for k2, c2 in other._d.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                d[k] = get(k, 0) + c1 * c2
        return LaurentPoly._raw(self.n, {k: _canon(c) for k, c in d.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        """Multiply by a scalar or :class:`VPoly`."""
        if isinstance(c, VPoly):
            return self * LaurentPoly.constant(self.n, c)
        c = _scalar(c)
        if not c:
            return LaurentPoly.zero(self.n)
        return LaurentPoly._raw(self.n, {k: _canon(a * c) for k, a in self._d.items()})

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative powers are only defined for monomials; use monomial()")
        out = LaurentPoly.one(self.n)
        for _ in range(m):
            out = out * self
        return out

    def mul_monomial(self, key: Sequence[int], c=1) -> "LaurentPoly":
        """Multiply by ``c * v**key[0] * y**key[1:]`` (flat key)."""
        c = _scalar(c)
        return LaurentPoly._raw(
            self.n,
            {tuple(a + b for a, b in zip(k, key)): _canon(a0 * c) for k, a0 in self._d.items()},
        )

    def mul_binomial(self, f: "Binomial") -> "LaurentPoly":
        """Multiply by ``1 - c * v**m * y**alpha``."""
        d = dict(self._d)
        key = f.key
        for k, a in self._d.items():
            _add_into(d, tuple(x + y for x, y in zip(k, key)), -a * f.scalar)
        return LaurentPoly._raw(self.n, _finish(d))

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self._d == other._d
        if isinstance(other, VPoly) or (isinstance(other, (int, Fraction)) and not isinstance(other, bool)):
            return self._d == LaurentPoly.constant(self.n, other)._d
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._d.items())))

    # -- substitutions ----------------------------------------------------

    def half_shift(self, i: int, sign: int) -> "LaurentPoly":
        """Substitute ``y_i -> q**(sign/2) * y_i``, i.e. ``T_{y_i}**(sign/2)``."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        j = i + 1
        d = {}
        for k, c in self._d.items():
            nk = list(k)
            nk[0] += sign * k[j]
            d[tuple(nk)] = c
        return LaurentPoly._raw(self.n, d)

    def q_shift(self, i: int, power: int = 1) -> "LaurentPoly":
        """Substitute ``y_i -> q**power * y_i``."""
        j = i + 1
        d = {}
        for k, c in self._d.items():
            nk = list(k)
            nk[0] += 2 * power * k[j]
            d[tuple(nk)] = c
        return LaurentPoly._raw(self.n, d)

    def invert_variable(self, i: int) -> "LaurentPoly":
        """Substitute ``y_i -> 1 / y_i``."""
        j = i + 1
        d = {}
        for k, c in self._d.items():
            nk = list(k)
            nk[j] = -nk[j]
            d[tuple(nk)] = c
        return LaurentPoly._raw(self.n, d)

    def permute(self, perm: Sequence[int]) -> "LaurentPoly":
        """Rename ``y_i -> y_perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError(f"{perm} is not a permutation of range({self.n})")
        d = {}
        for k, c in self._d.items():
            nk = [k[0]] + [0] * self.n
            for i, p in enumerate(perm):
                nk[p + 1] = k[i + 1]
            d[tuple(nk)] = c
        return LaurentPoly._raw(self.n, d)

    def signed_permute(self, perm: Sequence[int], signs: Sequence[int]) -> "LaurentPoly":
        """Apply ``y_i -> y_perm[i] ** signs[i]``."""
        d = {}
        for k, c in self._d.items():
            nk = [k[0]] + [0] * self.n
            for i, (p, s) in enumerate(zip(perm, signs)):
                nk[p + 1] = s * k[i + 1]
            d[tuple(nk)] = c
        return LaurentPoly._raw(self.n, d)

    def div_coeff(self, c: VPoly) -> "LaurentPoly":
        """Exact division of every coefficient by ``c``."""
        return LaurentPoly(self.n, {e: a.exact_div(c) for e, a in self.terms().items()})

    # -- numerics ---------------------------------------------------------

    def eval_numeric(self, q_val, y: Sequence[complex]) -> complex:
        """Evaluate at ``v = sqrt(q_val)`` (positive root) and the given ``y``."""
        y = np.asarray(y, dtype=complex)
        if y.shape != (self.n,):
            raise ValueError(f"expected {self.n} values of y, got shape {y.shape}")
        if np.any(y == 0):
            raise ValueError("y values must be nonzero")
        if not self._d:
            return 0j
        vval = math.sqrt(q_val) if isinstance(q_val, (int, float)) else np.sqrt(complex(q_val))
        keys = np.array(list(self._d.keys()), dtype=float)
        coeffs = np.array([float(c) for c in self._d.values()])
        base = np.concatenate(([vval], y))
        vals = np.prod(base[None, :] ** keys, axis=1)
        return complex(np.sum(coeffs * vals))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"y_exp": list(e), "coeff": c.to_json()} for e, c in self.terms().items()]

    @classmethod
    def from_json(cls, n: int, data: Iterable[Mapping]) -> "LaurentPoly":
        return cls(n, {tuple(t["y_exp"]): VPoly.from_json(t["coeff"]) for t in data})

    def pretty(self) -> str:
        """``c * y1^a1 ... yn^an`` terms in descending lexicographic order."""
        if not self._d:
            return "0"
        lines = []
        for e, c in self.terms().items():
            mono = " ".join(f"y{i + 1}^{a}" for i, a in enumerate(e))
            lines.append(f"({c}) * {mono}")
        return "\n".join(lines)

    def __repr__(self):
        return f"LaurentPoly(n={self.n}, terms={len(self)})"

    def __str__(self):
        return self.pretty().replace("\n", " + ")


@dataclass(frozen=True)
class Binomial:
    """The factor ``1 - scalar * v**v_exp * y**y_exp``."""

    y_exp: tuple[int, ...]
    v_exp: int = 0
    scalar: int | Fraction = 1

    def __post_init__(self):
        object.__setattr__(self, "y_exp", tuple(int(e) for e in self.y_exp))
        object.__setattr__(self, "scalar", _scalar(self.scalar))
        if not self.scalar:
            raise ValueError("binomial with zero coefficient")
        if self.v_exp == 0 and not any(self.y_exp) and self.scalar == 1:
            raise ValueError("binomial 1 - 1 is zero")

    @property
    def key(self) -> tuple[int, ...]:
        return (self.v_exp,) + self.y_exp

    def expand(self, n: int | None = None) -> LaurentPoly:
        n = len(self.y_exp) if n is None else n
        return LaurentPoly.one(n).mul_binomial(self)

    def normalized(self) -> tuple[tuple[int, ...], int | Fraction, "Binomial"]:
        """Rewrite as ``monomial * (1 - c' z**beta')`` with ``beta'`` lex-positive.

        Returns ``(monomial_key, monomial_scalar, binomial)``;
        ``1 - c z**b == -c z**b (1 - z**-b / c)``.
        """
        if self.key > (0,) * len(self.key):
            return (0,) * len(self.key), 1, self
        inv = _canon(Fraction(1) / Fraction(self.scalar))
        flipped = Binomial(tuple(-e for e in self.y_exp), -self.v_exp, inv)
        return self.key, -self.scalar, flipped

    def eval_numeric(self, q_val, y: Sequence[complex]) -> complex:
        vval = math.sqrt(q_val)
        val = complex(float(self.scalar) * vval ** self.v_exp)
        for yi, e in zip(y, self.y_exp):
            val *= complex(yi) ** e
        return 1 - val

    def __str__(self):
        y = " ".join(f"y{i + 1}^{e}" for i, e in enumerate(self.y_exp) if e)
        c = "" if self.scalar == 1 else f"{self.scalar}*"
        vv = "" if self.v_exp == 0 else f"v^{self.v_exp} "
        return f"(1 - {c}{vv}{y})".replace("  ", " ")


def expand_factors(factors: Iterable[Binomial], n: int) -> LaurentPoly:
    out = LaurentPoly.one(n)
    for f in factors:
        out = out.mul_binomial(f)
    return out


def _divide_binomial(p: LaurentPoly, f: Binomial) -> LaurentPoly:
    # Synthetic division by 1 - c z**b, sweeping terms in a lex monomial
    # order starting from the end where the divisor's leading term is 1.
    key, c = f.key, f.scalar
    if not p:
        return p
    positive = key > (0,) * len(key)
    sgn = 1 if positive else -1
    rem = dict(p._d)
    top = max(rem) if positive else min(rem)
    heap = [tuple(sgn * x for x in k) for k in rem]
    heapq.heapify(heap)
    quo: dict = {}
    while heap:
        hk = heapq.heappop(heap)
        k = tuple(sgn * x for x in hk)
        a = rem.pop(k, 0)
        if not a:
            continue
        nk = tuple(x + y for x, y in zip(k, key))
        if (positive and nk > top) or (not positive and nk < top):
            raise NotDivisible(f"not divisible by {f}", f)
        quo[k] = a
        if nk in rem:
            s = rem[nk] + a * c
            if s:
                rem[nk] = s
            else:
                del rem[nk]
        else:
            rem[nk] = a * c
            heapq.heappush(heap, tuple(sgn * x for x in nk))
    return LaurentPoly._raw(p.n, _finish(quo))


def exact_divide(p: LaurentPoly, factors: Iterable[Binomial] | Binomial) -> LaurentPoly:
    """Divide ``p`` by each binomial factor in turn, exactly.

    Raises :class:`NotDivisible` carrying the offending factor.
    """
    if isinstance(factors, Binomial):
        factors = (factors,)
    for f in factors:
        p = _divide_binomial(p, f)
    return p


def common_denominator_sum(
    terms: Iterable[tuple[LaurentPoly, Sequence[Binomial]]], n: int
) -> tuple[LaurentPoly, tuple[Binomial, ...]]:
    """Sum rational terms ``num / prod(factors)`` over their least common denominator.

    Each factor is first normalized so that associated binomials (those
    differing by a monomial unit) share one representative.  Returns the
    numerator of the sum and the list of denominator factors.
    """
    prepared = []
    lcm: dict[Binomial, int] = {}
    for num, factors in terms:
        counts: dict[Binomial, int] = {}
        for f in factors:
            mkey, msc, nf = f.normalized()
            # 1 / (m * g) = m**-1 / g
            num = num.mul_monomial(tuple(-x for x in mkey), Fraction(1) / Fraction(msc))
            counts[nf] = counts.get(nf, 0) + 1
        for nf, m in counts.items():
            lcm[nf] = max(lcm.get(nf, 0), m)
        prepared.append((num, counts))
    order = sorted(lcm, key=lambda b: (b.key, str(b.scalar)))
    total = LaurentPoly.zero(n)
    for num, counts in prepared:
        for nf in order:
            for _ in range(lcm[nf] - counts.get(nf, 0)):
                num = num.mul_binomial(nf)
        total = total + num
    denom = tuple(nf for nf in order for _ in range(lcm[nf]))
    return total, denom


class LaurentQuotient:
    """A Laurent polynomial with coefficients in ``Q(v)``, held as ``numerator / denominator``.

    The denominator is a single :class:`VPoly` shared by all terms.  After
    construction the pair is reduced: the gcd of the denominator with the
    content of the numerator is cancelled and the denominator is put in
    normal form (lowest term ``1 * v**0``).
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: VPoly | int = 1):
        den = denominator if isinstance(denominator, VPoly) else VPoly(denominator)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not numerator:
            den = VPoly(1)
        elif not den.is_constant():
            g = numerator.content().gcd(den)
            if not g.is_constant():
                numerator = numerator.div_coeff(g)
                den = den.exact_div(g)
        unit, den = den.unit_normal()
        if unit != 1:
            numerator = numerator.div_coeff(unit)
        self.numerator = numerator
        self.denominator = den

    @property
    def n(self) -> int:
        return self.numerator.n

    @classmethod
    def from_coefficients(cls, n: int, coeffs: Mapping[Sequence[int], VFrac]) -> "LaurentQuotient":
        den = VPoly(1)
        for c in coeffs.values():
            den = den * c.den.exact_div(den.gcd(c.den))
        terms = {e: c.num * den.exact_div(c.den) for e, c in coeffs.items()}
        return cls(LaurentPoly(n, terms), den)

    def is_polynomial(self) -> bool:
        return self.denominator == 1

    def to_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise NotDivisible("coefficients are not polynomial in v", self.denominator)
        return self.numerator

    def coeff(self, exps: Sequence[int]) -> VFrac:
        return VFrac(self.numerator.coeff(exps), self.denominator)

    def terms(self) -> dict[tuple[int, ...], VFrac]:
        return {e: VFrac(c, self.denominator) for e, c in self.numerator.terms().items()}

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = LaurentQuotient(other)
        if not isinstance(other, LaurentQuotient):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            other = LaurentQuotient(other)
        if not isinstance(other, LaurentQuotient):
            return NotImplemented
        return LaurentQuotient(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self):
        return LaurentQuotient(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LaurentQuotient":
        if isinstance(c, VFrac):
            return LaurentQuotient(self.numerator.scale(c.num), self.denominator * c.den)
        return LaurentQuotient(self.numerator.scale(c), self.denominator)

    def eval_numeric(self, q_val, y: Sequence[complex]) -> complex:
        return self.numerator.eval_numeric(q_val, y) / self.denominator.evaluate_q(q_val)

    def to_json(self) -> dict:
        return {"terms": self.numerator.to_json(), "denominator": self.denominator.to_json()}

    @classmethod
    def from_json(cls, n: int, data: Mapping) -> "LaurentQuotient":
        return cls(LaurentPoly.from_json(n, data["terms"]), VPoly.from_json(data["denominator"]))

    def pretty(self) -> str:
        body = self.numerator.pretty()
        if self.is_polynomial():
            return body
        return f"[{body.replace(chr(10), ' + ')}] / ({self.denominator})"

    def __repr__(self):
        return f"LaurentQuotient(n={self.n}, terms={len(self.numerator)}, denominator={self.denominator})"
