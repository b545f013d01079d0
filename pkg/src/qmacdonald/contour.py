"""Floating-point contour integrals of the one-form and pointwise application of E.

The integrand (with ``t = q**k``) is

    Phi = x**lam / prod_j [(y_j/x; q)_k (y_j**-1/x; q)_k] dx/x,

whose poles are ``y_j**(±1) q**m`` for ``0 <= m < k``.  On a circle
``|x| = r`` the trapezoid rule is spectrally accurate for this rational
integrand, so node doubling converges in a handful of steps.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .onerow import POLE_GUARD, PoleProximity

__all__ = [
    "NoConvergence",
    "PhiSpec",
    "QuadratureResult",
    "phi_integrand",
    "circle_integral",
    "contour_integral",
    "contour_integral_detailed",
    "numeric_apply_E",
    "shift_identity_residual",
    "verify_shift_identity",
    "random_y",
]

log = logging.getLogger(__name__)

DEFAULT_MARGIN = 0.1
MIN_NODES = 64
MAX_NODES = 2**16


class NoConvergence(RuntimeError):
    def __init__(self, message, last_values=()):
        super().__init__(message)
        self.last_values = tuple(last_values)


@dataclass(frozen=True)
class PhiSpec:
    lam: int
    n: int
    k: int
    q: float
    y: tuple[complex, ...]
    poles: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 < self.q < 1:
            raise ValueError(f"q must lie in (0, 1), got {self.q}")
        if self.lam < 0 or self.n < 1 or self.k < 1:
            raise ValueError("need lam >= 0, n >= 1, k >= 1")
        y = tuple(complex(a) for a in self.y)
        if len(y) != self.n:
            raise ValueError(f"expected {self.n} values of y, got {len(y)}")
        if any(a == 0 for a in y):
            raise ValueError("y values must be nonzero")
        object.__setattr__(self, "y", y)
        ya = np.array(y)
        qm = self.q ** np.arange(self.k)
        poles = np.concatenate([np.outer(ya, qm).ravel(), np.outer(1 / ya, qm).ravel()])
        object.__setattr__(self, "poles", poles)

    def with_y(self, y: Sequence[complex]) -> "PhiSpec":
        return PhiSpec(self.lam, self.n, self.k, self.q, tuple(y))

    @property
    def max_pole(self) -> float:
        return float(np.max(np.abs(self.poles)))

    def default_radius(self, margin: float = DEFAULT_MARGIN) -> float:
        return (1 + margin) * self.max_pole


def _pochs(spec: PhiSpec, x: np.ndarray) -> np.ndarray:
    # prod_j (y_j/x; q)_k (1/(y_j x); q)_k, vectorized over x
    out = np.ones_like(x, dtype=complex)
    for p in spec.poles:
        out = out * (1 - p / x)
    return out


def phi_integrand(spec: PhiSpec, x):
    """``x**(lam-1) / prod_j [(y_j/x;q)_k (y_j**-1/x;q)_k]`` (the coefficient of ``dx``)."""
    xa = np.asarray(x, dtype=complex)
    dist = np.min(np.abs(xa[..., None] - spec.poles), axis=-1)
    if np.any(dist < POLE_GUARD):
        raise PoleProximity("evaluation point within guard distance of a pole")
    val = xa ** (spec.lam - 1) / _pochs(spec, xa)
    return complex(val) if np.ndim(val) == 0 else val


def shift_factor(spec: PhiSpec, x):
    """``prod_i (1-y_i/x)(1-y_i**-1/x) / [(1-t y_i/x)(1-t y_i**-1/x)]``."""
    xa = np.asarray(x, dtype=complex)
    tq = spec.q ** spec.k
    out = np.ones_like(xa)
    for yi in spec.y:
        for a in (yi, 1 / yi):
            out = out * (1 - a / xa) / (1 - tq * a / xa)
    return out


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    nodes: int
    radius: float
    history: tuple[tuple[int, complex], ...] = ()


def circle_integral(f: Callable[[np.ndarray], np.ndarray], radius: float, nodes: int = MIN_NODES,
                    rtol: float = 1e-10, max_nodes: int = MAX_NODES) -> QuadratureResult:
    """``(1/2 pi i)`` times the integral of ``f(x) dx`` over ``|x| = radius``, counterclockwise.

    Trapezoid rule with node doubling until consecutive values agree to
    ``rtol`` (relative, with an absolute floor of ``rtol * 1e-6``).
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    if nodes < 1:
        raise ValueError("nodes must be positive")

    def rule(m):
        theta = 2 * np.pi * np.arange(m) / m
        xs = radius * np.exp(1j * theta)
        return complex(np.sum(f(xs) * xs) / m)

    history = []
    m = max(nodes, 2)
    prev = rule(m)
    history.append((m, prev))
    while True:
        if 2 * m > max_nodes:
            raise NoConvergence(f"no convergence by {m} nodes", [h[1] for h in history[-2:]])
        m *= 2
        cur = rule(m)
        history.append((m, cur))
        err = abs(cur - prev)
        log.debug("nodes=%d value=%r delta=%.3e", m, cur, err)
        if err <= rtol * max(abs(cur), 1e-6):
            return QuadratureResult(cur, m, radius, tuple(history))
        prev = cur


def contour_integral_detailed(spec: PhiSpec, radius: float | None = None, nodes: int = MIN_NODES,
                              rtol: float = 1e-10) -> QuadratureResult:
    """Integral of the one-form over a circle enclosing every pole."""
    if nodes < MIN_NODES:
        raise ValueError(f"nodes must be at least {MIN_NODES}")
    radius = spec.default_radius() if radius is None else float(radius)
    if radius <= spec.max_pole:
        raise ValueError(f"radius {radius} does not enclose all poles (max modulus {spec.max_pole})")
    return circle_integral(lambda x: phi_integrand(spec, x), radius, nodes, rtol)


def contour_integral(spec: PhiSpec, radius: float | None = None, nodes: int = MIN_NODES,
                     rtol: float = 1e-10) -> complex:
    return contour_integral_detailed(spec, radius, nodes, rtol).value


def operator_coefficient(signs: Sequence[int], n: int, k: int, q_val: float,
                         y: Sequence[complex]) -> complex:
    """Rational coefficient of ``T^(signs/2)`` in E, evaluated at ``y``."""
    tq = q_val ** k
    yy = [complex(a) ** s for a, s in zip(y, signs)]
    c = 1 + 0j
    for i, j in itertools.combinations(range(n), 2):
        m = yy[i] * yy[j]
        den = 1 - m
        if abs(den) < POLE_GUARD:
            raise PoleProximity(f"1 - y_{i+1}^a y_{j+1}^b is {abs(den):.3e}")
        c *= (1 - tq * m) / den
    for i in range(n):
        m = yy[i] ** 2
        den = 1 - m
        if abs(den) < POLE_GUARD:
            raise PoleProximity(f"1 - y_{i+1}^(2a) is {abs(den):.3e}")
        c *= (1 - tq * m) / den
    return c


def numeric_apply_E(F: Callable[[np.ndarray], complex], n: int, k: int, q_val: float,
                    y: Sequence[complex]) -> complex:
    """``(E F)(y)`` for a numeric function ``F`` of the vector ``y``."""
    y = np.asarray(y, dtype=complex)
    half = np.sqrt(q_val)
    total = 0j
    for signs in itertools.product((1, -1), repeat=n):
        c = operator_coefficient(signs, n, k, q_val, y)
        shifted = y * half ** np.array(signs)
        total += c * F(shifted)
    return total


def shift_identity_residual(spec: PhiSpec, radius: float | None = None, nodes: int = MIN_NODES) -> float:
    """Relative difference of the two sides of the ``x -> x/q`` change-of-variable identity.

    Left: integral of Phi.  Right: ``q**-lam`` times the integral of Phi
    multiplied by :func:`shift_factor`.  ``radius`` is not required to
    enclose every pole, so a deliberately small radius serves as a
    negative control.
    """
    radius = spec.default_radius() if radius is None else float(radius)
    lhs = circle_integral(lambda x: phi_integrand(spec, x), radius, nodes).value
    rhs = spec.q ** (-spec.lam) * circle_integral(
        lambda x: phi_integrand(spec, x) * shift_factor(spec, x), radius, nodes).value
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def verify_shift_identity(spec: PhiSpec, radius: float | None = None, nodes: int = MIN_NODES,
                          tol: float = 1e-8) -> bool:
    return shift_identity_residual(spec, radius, nodes) < tol


def _min_pairwise(points: np.ndarray) -> float:
    d = np.abs(points[:, None] - points[None, :])
    d[np.diag_indices_from(d)] = np.inf
    return float(d.min())


def random_y(rng: np.random.Generator, n: int, k: int, q_val: float,
             modulus_range: tuple[float, float] = (0.7, 1.4), separation: float = 1e-3,
             margin: float = DEFAULT_MARGIN, max_tries: int = 1000) -> tuple[complex, ...]:
    """Random ``y`` with well separated poles, none near the default contour.

    Moduli are uniform in ``modulus_range`` and phases uniform on the
    circle; configurations with two poles (or a pole and the contour)
    closer than ``separation`` are rejected and redrawn.
    """
    lo, hi = modulus_range
    for _ in range(max_tries):
        y = rng.uniform(lo, hi, n) * np.exp(2j * np.pi * rng.uniform(0, 1, n))
        spec = PhiSpec(0, n, k, q_val, tuple(y))
        if _min_pairwise(spec.poles) < separation:
            continue
        r = spec.default_radius(margin)
        if np.min(np.abs(np.abs(spec.poles) - r)) < separation:
            continue
        return tuple(complex(a) for a in y)
    raise RuntimeError("could not sample a well separated configuration")
