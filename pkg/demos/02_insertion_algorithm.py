"""
The insertion algorithm step by step
====================================

``Phi`` takes a partition in C1 (parts read modulo 2N, bounded gaps, small
smallest part) to one in C2 (no gap condition, fewer repetitions).  It first
peels off material divisible by 2N into a companion partition ``beta`` and
then pushes that material back onto prefixes of what remains.
"""

from eulerrefine import EULER_PARAMS, InsertionParams, Phi, Phi_inv
from eulerrefine.bijections import bessenrodt_extract, bessenrodt_insert, inverse_extract
from eulerrefine.families import enumerate_family

###############################################################################
# With N = 2 and A = {1, 2, 3} the two families are exactly A1 and A2.
lam = (11, 8, 8, 6, 5, 3, 1)
pair = bessenrodt_extract(lam, EULER_PARAMS)
print("lambda =", lam)
print("alpha  =", tuple(pair.alpha), " beta =", tuple(pair.beta))
gamma = bessenrodt_insert(pair, EULER_PARAMS)
print("gamma  =", tuple(gamma))

###############################################################################
# The inverse first strips multiples of 2N from prefixes of gamma, then
# inserts them back with the C1 gap rule in mind.
back = inverse_extract(gamma, EULER_PARAMS)
print("inverse extraction:", tuple(back.alpha), tuple(back.beta))
print("Phi_inv(gamma) =", tuple(Phi_inv(gamma)))

###############################################################################
# The same code handles any half-modulus and residue set.
params = InsertionParams(3, (1, 3, 4))
members = enumerate_family(params.c1(), 18)
images = {Phi(p, params) for p in members}
print(f"C1(N=3, A={{1,3,4}}) at n=18: {len(members)} members, {len(images)} distinct images,",
      f"{len(enumerate_family(params.c2(), 18))} members of C2")
