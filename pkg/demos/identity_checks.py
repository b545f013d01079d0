"""The rational identities behind the eigen-relation, evaluated and checked.

Run with ``python demos/identity_checks.py``.
"""

from qmacdonald.identities import all_checks, poincare_as_printed_check

for n in (1, 2, 3):
    for r in all_checks(n, k=2, trials=50, seed=1):
        print(r)
    print()

# Dropping the e_i - e_j factors from the type C product breaks the
# Poincare sum once there are two or more variables.
for n in (1, 2, 3):
    print(poincare_as_printed_check(n, 2, trials=20))
