"""
Andrews-Olsson type counting
============================

Cardinalities of the paired families agree for every residue set; here is a
small table for N = 4.
"""

from eulerrefine.families import ao_pairs, b_pairs, cardinality

print("AO1 vs AO2, N = 4")
for left, right in ao_pairs(4):
    counts = [(cardinality(left, n), cardinality(right, n)) for n in range(16)]
    assert all(a == b for a, b in counts)
    print(f"  A={','.join(map(str, left.residues)):<6}", " ".join(str(a) for a, _ in counts))

###############################################################################
# Splitting A into repeatable and non-repeatable residues.
print("B1 vs B2, N = 3")
for left, right in b_pairs(3):
    counts = [cardinality(left, n) for n in range(16)]
    assert counts == [cardinality(right, n) for n in range(16)]
    print(f"  {str(left):<24}", " ".join(map(str, counts)))
