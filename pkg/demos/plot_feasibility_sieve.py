"""
Which orders can carry a Paley-type PDS?
========================================

Run the existence sieve on the small orders v = 1 (mod 4) and on the
instances that motivate it.
"""

from collections import Counter

from pdskit import atlas, sieve, subgroup_restriction, paley_params
from pdskit.feasibility import OrderFactorization, congruence_rule

print(sieve(225))
print(sieve(25 * 49))
print(sieve(441))
print(sieve(3**4 * 7**2))
print(sieve(3**4 * 5**4))

# tally verdicts below 10000
verdicts = atlas(10000)
print(Counter((v.kind, v.rule) for v in verdicts))

# the open square orders with two or more primes
open_orders = [v.v for v in verdicts if v.kind == "Open"]
print([str(OrderFactorization.of(v)) for v in open_orders[:10]])

# the congruence behind rule R2: 1 + p + ... + p^(2k-1) mod 4
for p in [3, 5, 7, 13]:
    print(p, [congruence_rule(p, 2 * k) for k in range(1, 5)])

# restricting a putative (225, 112, 55, 56) set to its Hall subgroups
for n in (9, 25):
    r = subgroup_restriction(paley_params(225), n)
    print(n, r.candidate_params(), "pi =", r.pi, "theta =", r.theta)
