"""
Intersecting a PDS with a Hall subgroup
=======================================

The parameters of D intersect N follow from (v, k, lambda, mu) and |N|
alone.  Compare the prediction with an actual set in Z15 x Z15.
"""

from pdskit import CandidateSet, hall_subgroup, parse_group, subgroup_restriction, verify_pds
from pdskit.search import restrict

G = parse_group("Z15^2")
# two cyclic subgroups of order 15, identity removed
lines = [{G.scale(s, gen) for s in range(15)} for gen in [(1, 0, 1, 0), (0, 1, 0, 1)]]
D = CandidateSet(G, frozenset(set().union(*lines) - {G.identity}))
params = verify_pds(D).params
print("D:", params, "beta =", params.beta, "Delta =", params.delta)

for primes in ({3}, {5}):
    N = hall_subgroup(G, primes)
    predicted = subgroup_restriction(params, N.order)
    actual = verify_pds(restrict(D, N)).params
    print(f"|N| = {N.order}: theta = {predicted.theta}, beta1 = {predicted.beta1}, "
          f"predicted {[str(p) for p in predicted.candidate_params()]}, actual {actual}")
