"""A tour of the one-row Macdonald polynomials P_(lambda, 0, ..., 0).

Run with ``python demos/one_row_polynomials.py``.
"""

from qmacdonald import apply_E, corollary_P, eigenvalue_c, solve_P
from qmacdonald.macdonald_op import expand_in_monomials

# With one variable and t = q**2 the constant term of P_(2) is already a
# proper fraction in q.  Coefficients live in Q(q^(1/2)), not in the
# polynomial ring, so results come back as a numerator over a denominator.
P = corollary_P(2, 1, 2)
print("P_(2) for n=1, k=2:")
print("  ", P.pretty())
print("   constant term:", P.coeff((0,)))

# Two independent constructions agree: the explicit sum over compositions
# and the triangular solve from the eigenvalue problem.
lam, n, k = 3, 2, 2
P = corollary_P(lam, n, k)
print(f"\nP_({lam},0) for n={n}, k={k} equals the eigen-solve result:", P == solve_P((lam,), n, k))

# Expanded in the orbit-sum basis m_nu, only nu below (3,0) appear.
print("coefficients in the m_nu basis (numerators, common denominator "
      f"{P.denominator}):")
for nu, c in expand_in_monomials(P.numerator).items():
    print(f"   m_{tuple(nu)}: {c}")

# The eigen-relation, checked exactly.
c = eigenvalue_c((lam,), n, k)
print("\neigenvalue c =", c)
print("E P == c P exactly:", apply_E(P, n, k) == P.scale(c))
