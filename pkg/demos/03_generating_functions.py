"""
Generating functions, checked coefficient by coefficient
========================================================

Sums over enumerated partitions are compared with truncated infinite
products, all with exact integer coefficients.
"""

from eulerrefine import expand_product, family_sum, load_manifest, series_equal
from eulerrefine.qseries import odd_chain_factors

###############################################################################
# x^(number of parts with odd multiplicity) y^(length) over odd-part
# partitions, against prod (1 + xy q^(2j-1)) / (1 - y^2 q^(4j-2)).
Q = 9
lhs = family_sum("O", "x=no,y=l", Q)
rhs = expand_product(odd_chain_factors(Q), Q)
for g in range(Q + 1):
    print(f"q^{g}: {lhs.format_grade(g)}")
print(series_equal(lhs, rhs).describe())

###############################################################################
# Every catalogued identity at a modest order.
for ident in load_manifest().values():
    print(f"{ident.id:>7}  {ident.check(12).describe():<6}  {ident.title}")
