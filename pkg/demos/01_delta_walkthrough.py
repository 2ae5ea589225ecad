"""
From distinct parts to odd parts
================================

Walk one partition through the three maps that make up ``delta`` and
check the statistics it is built to carry across.
"""

from eulerrefine import delta, delta_inv, delta_trace, statistics
from eulerrefine.families import FamilySpec, enumerate_family
from eulerrefine.partition import format_partition

lam = (17, 16, 14, 10, 7, 4, 2, 1)

###############################################################################
# ``delta`` is the composite psi^-1 . Phi . varphi.  The first step reads the
# columns of the 2-modular diagram, the second runs the insertion algorithm
# with 2N = 4, and the last splits each part 4i-2 into two copies of 2i-1.
alpha, beta, mu = delta_trace(lam)
print("lambda          ", format_partition(lam))
print("varphi(lambda)  ", format_partition(alpha))
print("Phi(alpha)      ", format_partition(beta))
print("mu              ", format_partition(mu, compact=True))

###############################################################################
# Number of odd parts and alternating sum on the left become number of parts
# with odd multiplicity and length on the right.
s, t = statistics(lam), statistics(mu)
print(f"(lo, la) = ({s.odd_parts}, {s.alt_sum})   (no, l) = ({t.odd_mult_parts}, {t.length})")
assert delta_inv(mu) == lam

###############################################################################
# The whole of D(7), side by side with its images.
for p in enumerate_family(FamilySpec("D"), 7):
    m = delta(p)
    sp, sm = statistics(p), statistics(m)
    print(f"({format_partition(p, compact=True):>6})  lo={sp.odd_parts} la={sp.alt_sum}"
          f"   ->  ({format_partition(m, compact=True):>6})  no={sm.odd_mult_parts} l={sm.length}")
