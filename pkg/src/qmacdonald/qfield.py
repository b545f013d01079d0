"""Exact coefficient arithmetic in ``v = q**(1/2)``.

Coefficients of every symbolic object in the package are Laurent
polynomials in the single formal variable ``v`` with rational
coefficients (:class:`VPoly`).  ``q`` is ``v**2`` and ``t`` is always
specialized to ``q**k`` for an integer ``k >= 1``, so half-integer powers
of ``q`` stay exact.  Quotients of two such polynomials are held in
:class:`VFrac`.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "NotDivisible",
    "VPoly",
    "VFrac",
    "v",
    "q",
    "t",
    "poch_finite",
    "gauss_coeff",
    "eigenvalue_c",
]


class NotDivisible(ArithmeticError):
    """An exact division left a nonzero remainder."""

    def __init__(self, message, divisor=None):
        super().__init__(message)
        self.divisor = divisor


def _canon(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _scalar(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _canon(Fraction(c))
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


def _fmt_rational(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


class VPoly:
    """Laurent polynomial in ``v`` with rational coefficients.

    Instances are immutable and hashable.  Zero coefficients are never
    stored, so equality is structural.

    >>> VPoly({0: 1, 2: 1}) * VPoly({0: 1, 2: -1})
    VPoly({0: 1, 4: -1})
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | int | Fraction | None = None):
        if coeffs is None:
            self._c = {}
        elif isinstance(coeffs, Mapping):
            c = {}
            for e, a in coeffs.items():
                a = _scalar(a)
                if a:
                    c[int(e)] = a
            self._c = c
        else:
            a = _scalar(coeffs)
            self._c = {0: a} if a else {}
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "VPoly":
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "VPoly":
        coeff = _scalar(coeff)
        return cls._raw({exp: coeff} if coeff else {})

    # -- inspection -------------------------------------------------------

    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._c.items())

    def __getitem__(self, exp: int):
        return self._c.get(exp, 0)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    @property
    def min_exp(self) -> int:
        return min(self._c)

    @property
    def max_exp(self) -> int:
        return max(self._c)

    def lowest(self):
        """Coefficient of the lowest power of ``v``."""
        return self._c[min(self._c)]

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, VPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return VPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = _canon(s)
            else:
                c.pop(e, None)
        return VPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return VPoly._raw({e: -a for e, a in self._c.items()})

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
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + a1 * a2
                if s:
                    c[e] = s
                else:
                    del c[e]
        return VPoly._raw({e: _canon(a) for e, a in c.items()})

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (e, a), = self._c.items()
            return VPoly.monomial(e * m, Fraction(1, 1) / Fraction(a) ** (-m))
        out = VPoly(1)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def shift(self, m: int) -> "VPoly":
        """Multiply by ``v**m``."""
        return VPoly._raw({e + m: a for e, a in self._c.items()})

    def __truediv__(self, other):
        if isinstance(other, VFrac):
            return VFrac(self) / other
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return VFrac(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return VFrac(other, self)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- division ---------------------------------------------------------

    def divmod(self, other: "VPoly") -> tuple["VPoly", "VPoly"]:
        """Division with remainder, reading both as Laurent polynomials.

        Both operands are shifted to start at ``v**0``; the quotient is
        then multiplied back by ``v**(self.min_exp - other.min_exp)``.
        """
        if not other:
            raise ZeroDivisionError("division by zero VPoly")
        if not self:
            return VPoly(), VPoly()
        sa, sb = self.min_exp, other.min_exp
        a = {e - sa: Fraction(c) for e, c in self._c.items()}
        b = {e - sb: c for e, c in other._c.items()}
        db = max(b)
        lead = Fraction(b[db])
        quo: dict = {}
        while a:
            da = max(a)
            if da < db:
                break
            f = a[da] / lead
            quo[da - db] = f
            for e, c in b.items():
                k = e + da - db
                s = a.get(k, 0) - f * c
                if s:
                    a[k] = s
                else:
                    a.pop(k, None)
        shift = sa - sb
        q_ = VPoly({e + shift: c for e, c in quo.items()})
        r = VPoly({e + sa: c for e, c in a.items()})
        return q_, r

    def exact_div(self, other: "VPoly") -> "VPoly":
        """Quotient ``self / other``; raises :class:`NotDivisible` on remainder."""
        if isinstance(other, (int, Fraction)):
            other = VPoly(other)
        if other.is_monomial():
            (e, a), = other._c.items()
            inv = Fraction(1) / Fraction(a)
            return VPoly._raw({k - e: _canon(c * inv) for k, c in self._c.items()})
        quo, rem = self.divmod(other)
        if rem:
            raise NotDivisible(f"{self} is not divisible by {other}", other)
        return quo

    def unit_normal(self) -> tuple["VPoly", "VPoly"]:
        """Split into ``(unit, normal)`` with ``self == unit * normal``.

        The normal part starts at ``v**0`` with lowest coefficient 1; the
        unit is a monomial ``c * v**m``.
        """
        if not self:
            return VPoly(1), VPoly()
        m = self.min_exp
        c = Fraction(self._c[m])
        inv = 1 / c
        normal = VPoly._raw({e - m: _canon(a * inv) for e, a in self._c.items()})
        return VPoly.monomial(m, c), normal

    def gcd(self, other: "VPoly") -> "VPoly":
        """Greatest common divisor up to units, in normal form."""
        a = self.unit_normal()[1]
        b = other.unit_normal()[1]
        if not a:
            return b if b else VPoly()
        if not b:
            return a
        while b and not b.is_constant():
            _, r = a.divmod(b)
            a, b = b, r.unit_normal()[1]
        if b:
            return VPoly(1)
        return a.unit_normal()[1]

    # -- evaluation / serialization ----------------------------------------

    def __call__(self, vval):
        """Evaluate numerically at ``v = vval``."""
        return sum(float(a) * vval ** e for e, a in self._c.items()) if self._c else 0.0

    def evaluate_q(self, q_val):
        """Evaluate at ``v = sqrt(q_val)`` (positive root)."""
        if isinstance(q_val, (int, float)) and q_val > 0:
            return self(math.sqrt(q_val))
        return self(cmath.sqrt(q_val))

    def to_json(self) -> list:
        return [[e, _fmt_rational(a)] for e, a in self.items()]

    @classmethod
    def from_json(cls, data: Iterable) -> "VPoly":
        return cls({int(e): Fraction(s) for e, s in data})

    def __repr__(self):
        return f"VPoly({dict(self.items())!r})"

    def __str__(self):
        if not self._c:
            return "0"
        half = all(e % 2 == 0 for e in self._c)
        sym, div = ("q", 2) if half else ("v", 1)
        parts = []
        for e, a in self.items():
            p = e // div
            mono = "" if p == 0 else (sym if p == 1 else f"{sym}^{p}")
            mag = abs(Fraction(a))
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if a < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


class VFrac:
    """Quotient of two :class:`VPoly`, kept reduced.

    The denominator is normalized to start at ``v**0`` with lowest
    coefficient 1; equality is by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduce: bool = True):
        num = num if isinstance(num, VPoly) else VPoly(num)
        den = VPoly(1) if den is None else (den if isinstance(den, VPoly) else VPoly(den))
        if not den:
            raise ZeroDivisionError("VFrac with zero denominator")
        if reduce:
            if not num:
                den = VPoly(1)
            else:
                g = num.gcd(den)
                if not g.is_constant():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            unit, den = den.unit_normal()
            num = num.exact_div(unit)
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(other):
        if isinstance(other, VFrac):
            return other
        if isinstance(other, VPoly) or (isinstance(other, (int, Fraction)) and not isinstance(other, bool)):
            return VFrac(other)
        return NotImplemented

    def is_polynomial(self) -> bool:
        return self.den == 1

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return VFrac(self.num + other.num, self.den)
        return VFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return VFrac(-self.num, self.den, reduce=False)

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
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return VFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by zero VFrac")
        return VFrac(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def evaluate_q(self, q_val):
        return self.num.evaluate_q(q_val) / self.den.evaluate_q(q_val)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __repr__(self):
        return f"VFrac({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


def v(exp: int = 1) -> VPoly:
    """The monomial ``v**exp``."""
    return VPoly.monomial(exp)


def q(exp: int = 1) -> VPoly:
    """The monomial ``q**exp = v**(2*exp)``."""
    return VPoly.monomial(2 * exp)


def t(k: int, exp: int = 1) -> VPoly:
    """``t**exp`` with ``t = q**k``."""
    if k < 1:
        raise ValueError("t = q**k requires k >= 1")
    return VPoly.monomial(2 * k * exp)


def poch_finite(a, m: int, base=None):
    """Finite q-Pochhammer symbol ``(a; q)_m = prod_{i<m} (1 - a q**i)``.

    ``a`` may be any ring element that multiplies with ``base`` (default
    the exact ``q``), e.g. a :class:`VPoly`, a Laurent polynomial, or a
    complex number together with a numeric ``base``.
    """
    if m < 0:
        raise ValueError("poch_finite requires m >= 0")
    base = q() if base is None else base
    out = 1
    term = a
    for _ in range(m):
        out = out * (1 - term)
        term = term * base
    return out


@lru_cache(maxsize=None)
def gauss_coeff(k: int, i: int) -> VPoly:
    """``(q**k; q)_i / (q; q)_i``, a polynomial in ``q``.

    Equals the Gaussian binomial ``[k - 1 + i, i]_q``.
    """
    if k < 1 or i < 0:
        raise ValueError("gauss_coeff requires k >= 1 and i >= 0")
    num = VPoly(1) * poch_finite(t(k), i)
    den = VPoly(1) * poch_finite(q(), i)
    return num.exact_div(den)


def eigenvalue_c(mu, n: int, k: int) -> VPoly:
    """Eigenvalue ``c_mu = q**(-|mu|/2) prod_i (1 + q**mu_i t**(n-i+1))``."""
    parts = tuple(mu)
    if len(parts) > n:
        if any(parts[n:]):
            raise ValueError(f"partition {parts} has more than {n} nonzero parts")
        parts = parts[:n]
    parts = parts + (0,) * (n - len(parts))
    out = v(-sum(parts))
    for i, m in enumerate(parts, start=1):
        out = out * (1 + q(m) * t(k, n - i + 1))
    return out
