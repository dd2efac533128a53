"""
Paley sets from finite fields
=============================

Build the nonzero squares of F_q, check them by exact difference counting,
and look at the Cayley graph they define.
"""

import numpy as np

from pdskit import cayley_srg_params, paley_params, paley_pds, verify_pds
from pdskit.gf import FiniteField
from pdskit.groups import character_sums

# F_13 is a prime field, so the squares live in the cyclic group Z13
D = paley_pds(13)
print(sorted(D.members))
print(verify_pds(D).summary())

# F_9 needs a quadratic modulus; the smallest irreducible over Z3 is x^2 + 1
F = FiniteField.of_order(9)
print("modulus coefficients (low to high):", F.modulus)
D9 = paley_pds(9)
print("F_9 squares as vectors in Z3 x Z3:", sorted(D9.members))

# every construction in range gives exactly the Paley parameters
for q in [5, 9, 13, 17, 25, 29, 37, 41, 49]:
    report = verify_pds(paley_pds(q))
    assert report.params == paley_params(q)
    print(q, report.params, "regular" if report.is_regular else "", "Delta =", report.params.delta)

# Cay(G, D) is strongly regular; counting common neighbours gives the same numbers
print(cayley_srg_params(D9).params)

# the nontrivial character sums take only the two values (-1 +- sqrt(q))/2
sums = character_sums(D9.group, D9.members).real.ravel()[1:]
print(np.unique(np.round(sums, 6)))
