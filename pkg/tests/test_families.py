from collections import Counter

import pytest

from eulerrefine.families import (
    FamilySpec,
    SpecError,
    ao,
    ao_pairs,
    b_family,
    b_pairs,
    c_family,
    c_pairs,
    cardinality,
    contains,
    enumerate_family,
    joint_distribution,
    parse_spec,
    residue_sets,
    stat_value,
    violation,
)
from eulerrefine.partition import Partition

from conftest import naive_partitions

D, O, A1, A2, ALL = (FamilySpec(k) for k in ("D", "O", "A1", "A2", "All"))


# Literal transcriptions of the family definitions, used as the oracle.

def _pairs(p):
    return list(zip(p, p[1:]))


def oracle(spec, p):
    k, m = spec.kind, spec.modulus
    if k == "All":
        return True
    if k == "D":
        return len(set(p)) == len(p)
    if k == "O":
        return all(x % 2 for x in p)
    if k == "A1":
        return (all(a != b or a % 2 == 0 for a, b in _pairs(p))
                and all(a - b <= (3 if a % 2 == 0 or b % 2 == 0 else 4) for a, b in _pairs(p))
                and (not p or p[-1] < 4))
    if k == "A2":
        return all(x % 4 for x in p) and all(a != b or a % 2 == 0 for a, b in _pairs(p))
    A = set(spec.residues)
    if k == "AO1":
        return (all(x % m == 0 or x % m in A for x in p)
                and all(a != b or a % m == 0 for a, b in _pairs(p))
                and all(a - b < m if (a % m == 0 or b % m == 0) else a - b <= m for a, b in _pairs(p))
                and (not p or p[-1] < m))
    if k == "AO2":
        return all(x % m in A for x in p) and len(set(p)) == len(p)
    if k == "C1":
        N = m // 2
        return (all(x % m == 0 or x % m in A for x in p)
                and all(a != b or a % N == 0 for a, b in _pairs(p))
                and all(a - b < m if (a % N == 0 or b % N == 0) else a - b <= m for a, b in _pairs(p))
                and (not p or p[-1] < m))
    if k == "C2":
        N = m // 2
        return all(x % m in A for x in p) and all(a != b or a % N == 0 for a, b in _pairs(p))
    rep = set(spec.repeatable)
    if k == "B1":
        sp = lambda x: x % m == 0 or x % m in rep  # noqa: E731
        return (all(x % m == 0 or x % m in A for x in p)
                and all(a != b or sp(a) for a, b in _pairs(p))
                and all(a - b < m if (sp(a) or sp(b)) else a - b <= m for a, b in _pairs(p))
                and (not p or p[-1] < m))
    return all(x % m in A for x in p) and all(a != b or a % m in rep for a, b in _pairs(p))


SAMPLE_SPECS = [
    ALL, D, O, A1, A2,
    ao(1, 4, (1, 3)), ao(2, 4, (1, 3)), ao(1, 5, (2,)), ao(2, 3, (1, 2)),
    c_family(1, 2, (1, 2, 3)), c_family(2, 2, (1, 2, 3)), c_family(1, 3, (2, 3, 5)),
    c_family(2, 3, (1, 4)), c_family(1, 1, (1,)), c_family(2, 1, (1,)),
    b_family(1, 3, (1,), (2,)), b_family(2, 3, (1,), (2,)), b_family(1, 4, (1, 2), (3,)),
    b_family(2, 5, (), (1, 4)), b_family(1, 2, (1,), ()), b_family(2, 2, (1,), ()),
]


@pytest.mark.parametrize("spec", SAMPLE_SPECS, ids=str)
def test_enumeration_matches_filtered_brute_force(spec):
    for n in range(21):
        expected = [p for p in naive_partitions(n) if oracle(spec, p)]
        got = enumerate_family(spec, n)
        assert got == expected  # same members, same decreasing lexicographic order
        assert all(contains(spec, p) for p in got)
        assert cardinality(spec, n) == len(expected)


@pytest.mark.parametrize("spec", SAMPLE_SPECS, ids=str)
def test_contains_matches_oracle(spec):
    for n in range(15):
        for p in naive_partitions(n):
            assert contains(spec, p) == oracle(spec, p), p


def test_membership_examples():
    assert contains(A1, (15, 12, 10, 9, 8, 6, 6, 4, 1))
    assert contains(A2, (19, 18, 13, 10, 6, 5))
    assert not contains(A2, (4,))
    assert not contains(A1, (6, 1))
    assert "difference" in violation(A1, (6, 1))
    assert "residue" in violation(A2, (4,))


def test_enumerate_examples():
    assert enumerate_family(D, 7) == [(7,), (6, 1), (5, 2), (4, 3), (4, 2, 1)]
    assert enumerate_family(O, 7) == [(7,), (5, 1, 1), (3, 3, 1), (3, 1, 1, 1, 1), (1,) * 7]
    assert enumerate_family(ALL, 0) == [()]
    assert len(enumerate_family(D, 10)) == sum(
        1 for p in naive_partitions(10) if len(set(p)) == len(p)) == 10


def test_cardinality_examples():
    assert cardinality(D, 7) == 5
    assert cardinality(O, 0) == 1
    assert cardinality(c_family(1, 2, (1, 2, 3)), 7) == cardinality(c_family(2, 2, (1, 2, 3)), 7)


def test_joint_distribution_examples():
    assert joint_distribution(D, 7, ["lo", "la"]) == Counter([(1, 7), (1, 5), (1, 3), (1, 1), (1, 3)])
    assert joint_distribution(O, 7, ["no", "l"]) == Counter([(1, 7), (1, 5), (1, 3), (1, 1), (1, 3)])
    assert joint_distribution(D, 0, ["la"]) == Counter([(0,)])


def test_fine_selector_rejects_even_largest_part():
    assert stat_value(Partition((5, 3, 1)), "fine") == 2 + 3
    with pytest.raises(ValueError):
        joint_distribution(D, 4, ["fine"])


def test_euler_to_40():
    for n in range(41):
        assert cardinality(D, n) == cardinality(O, n)


def test_specialisation_to_a1_a2():
    c1, c2 = c_family(1, 2, (1, 2, 3)), c_family(2, 2, (1, 2, 3))
    for n in range(27):
        for p in naive_partitions(n):
            assert contains(c1, p) == contains(A1, p)
            assert contains(c2, p) == contains(A2, p)


@pytest.mark.parametrize("text,kind,modulus,residues", [
    ("D", "D", None, ()),
    ("ALL", "All", None, ()),
    ("AO1:N=4,A=1,3", "AO1", 4, (1, 3)),
    ("C1:N=2,A=1,2,3", "C1", 4, (1, 2, 3)),
    (" C2 : N = 3 , A = 1 , 5 ", "C2", 6, (1, 5)),
])
def test_parse_spec(text, kind, modulus, residues):
    spec = parse_spec(text)
    assert (spec.kind, spec.modulus, spec.residues) == (kind, modulus, residues)
    assert parse_spec(str(spec)) == spec


def test_parse_b_spec():
    spec = parse_spec("B1:N=3,Arep=1,Anon=2")
    assert (spec.repeatable, spec.nonrepeatable, spec.residues) == ((1,), (2,), (1, 2))
    assert parse_spec("B2:N=3,Arep=,Anon=1,2").repeatable == ()
    assert parse_spec(str(spec)) == spec


@pytest.mark.parametrize("text", [
    "Q", "D:N=2", "AO1:N=4", "AO1:N=4,A=4", "AO1:N=4,A=3,1", "C1:A=1", "C1:N=2,A=0",
    "B1:N=3,Arep=1,Anon=1", "B1:N=3,Arep=,Anon=", "AO1:N=x,A=1", "AO1:N=4,A=1,B=2",
])
def test_parse_spec_rejects(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_sweep_manifests_are_deterministic_and_complete():
    assert residue_sets(3) == [(1,), (2,), (1, 2)]
    assert len(residue_sets(6)) == 31
    assert [len(ao_pairs(N)) for N in (2, 3, 4, 5)] == [1, 3, 7, 15]
    # each residue set A contributes 2^|A| splits: total 3^(N-1) - 1
    assert [len(b_pairs(N)) for N in (2, 3, 4, 5)] == [2, 8, 26, 80]
    assert [len(c_pairs(N)) for N in (1, 2, 3)] == [1, 7, 31]
    keys = [str(a) for a, _ in b_pairs(4)]
    assert len(set(keys)) == len(keys)


def test_andrews_olsson_small_sweep():
    for N in (2, 3, 4):
        for left, right in ao_pairs(N):
            for n in range(16):
                assert cardinality(left, n) == cardinality(right, n)
