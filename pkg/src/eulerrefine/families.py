"""Partition families: membership tests and exhaustive enumeration.

Families are described by a :class:`FamilySpec`.  Text forms::

    D  O  A1  A2  ALL
    AO1:N=4,A=1,3      AO2:N=4,A=1,3
    C1:N=2,A=1,2,3     C2:N=2,A=1,2,3      (N is half the modulus 2N)
    B1:N=3,Arep=1,Anon=2                   (A = Arep | Anon)

Every family contains the empty partition at n = 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .partition import (
    Partition,
    StatisticsBundle,
    conjugate,
    format_partition,
    odd_part_count,
    statistics,
)

KINDS = ("All", "D", "O", "A1", "A2", "AO1", "AO2", "C1", "C2", "B1", "B2")
_PARAMETRISED = {"AO1", "AO2", "C1", "C2", "B1", "B2"}


class SpecError(ValueError):
    """Malformed family description."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    modulus: int | None = None
    residues: tuple[int, ...] = ()
    repeatable: tuple[int, ...] = ()
    nonrepeatable: tuple[int, ...] = ()
    _rules: "_Rules" = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        kind = {"ALL": "All", "all": "All"}.get(self.kind, self.kind)
        object.__setattr__(self, "kind", kind)
        if kind not in KINDS:
            raise SpecError(f"unknown family kind {self.kind!r}")
        if kind in _PARAMETRISED:
            m = self.modulus
            if m is None or m < 2:
                raise SpecError(f"{kind} needs a modulus >= 2")
            if kind in ("C1", "C2") and m % 2:
                raise SpecError(f"{kind} modulus must be even (it stores 2N)")
            if kind in ("B1", "B2"):
                rep, non = tuple(sorted(self.repeatable)), tuple(sorted(self.nonrepeatable))
                if set(rep) & set(non):
                    raise SpecError("repeatable and nonrepeatable residues overlap")
                object.__setattr__(self, "repeatable", rep)
                object.__setattr__(self, "nonrepeatable", non)
                res = tuple(sorted(rep + non))
                if self.residues and tuple(sorted(self.residues)) != res:
                    raise SpecError("residues must equal Arep | Anon")
                object.__setattr__(self, "residues", res)
            res = tuple(self.residues)
            if not res:
                raise SpecError(f"{kind} needs a nonempty residue set")
            if any(b <= a for a, b in zip(res, res[1:])) or res[0] < 1 or res[-1] >= m:
                raise SpecError(f"residues must be strictly increasing inside 1..{m - 1}")
        elif self.modulus is not None or self.residues:
            raise SpecError(f"{kind} takes no parameters")
        object.__setattr__(self, "_rules", _Rules.build(self))

    @property
    def half_modulus(self) -> int:
        if self.kind not in ("C1", "C2"):
            raise SpecError("half_modulus is only defined for C families")
        return self.modulus // 2

    def __str__(self) -> str:
        return format_spec(self)


# convenience constructors

def distinct() -> FamilySpec:
    return FamilySpec("D")


def odd() -> FamilySpec:
    return FamilySpec("O")


def ao(kind: int, N: int, A: Sequence[int]) -> FamilySpec:
    return FamilySpec(f"AO{kind}", N, tuple(A))


def c_family(kind: int, N: int, A: Sequence[int]) -> FamilySpec:
    """C_1 or C_2 for half-modulus ``N`` (so parts are read modulo ``2N``)."""
    return FamilySpec(f"C{kind}", 2 * N, tuple(A))


def b_family(kind: int, N: int, rep: Sequence[int], non: Sequence[int]) -> FamilySpec:
    return FamilySpec(f"B{kind}", N, repeatable=tuple(rep), nonrepeatable=tuple(non))


# -- text form ---------------------------------------------------------------

def parse_spec(text: str) -> FamilySpec:
    """Parse the text form described in the module docstring."""
    text = "".join(text.split())
    head, _, tail = text.partition(":")
    kind = {"ALL": "All", "all": "All", "P": "All"}.get(head, head)
    if kind not in KINDS:
        raise SpecError(f"unknown family kind {head!r}")
    if kind not in _PARAMETRISED:
        if tail:
            raise SpecError(f"{kind} takes no parameters")
        return FamilySpec(kind)
    params: dict[str, list[int]] = {}
    key = None
    for token in tail.split(",") if tail else []:
        if "=" in token:
            key, _, token = token.partition("=")
            if key in params:
                raise SpecError(f"duplicate key {key!r}")
            params[key] = []
            if token == "":
                continue
        if key is None:
            raise SpecError(f"value {token!r} before any key")
        try:
            params[key].append(int(token))
        except ValueError:
            raise SpecError(f"bad integer {token!r}") from None
    allowed = {"N", "Arep", "Anon"} if kind in ("B1", "B2") else {"N", "A"}
    if set(params) - allowed or "N" not in params or len(params["N"]) != 1:
        raise SpecError(f"{kind} expects keys {sorted(allowed)} with a single N")
    N = params["N"][0]
    if kind in ("B1", "B2"):
        return FamilySpec(kind, N, repeatable=tuple(params.get("Arep", ())),
                          nonrepeatable=tuple(params.get("Anon", ())))
    if "A" not in params:
        raise SpecError(f"{kind} needs A=...")
    modulus = 2 * N if kind in ("C1", "C2") else N
    return FamilySpec(kind, modulus, tuple(params["A"]))


def format_spec(spec: FamilySpec) -> str:
    kind = spec.kind
    if kind not in _PARAMETRISED:
        return kind
    if kind in ("B1", "B2"):
        return (f"{kind}:N={spec.modulus},Arep={','.join(map(str, spec.repeatable))},"
                f"Anon={','.join(map(str, spec.nonrepeatable))}")
    N = spec.modulus // 2 if kind in ("C1", "C2") else spec.modulus
    return f"{kind}:N={N},A={','.join(map(str, spec.residues))}"


# -- rules -------------------------------------------------------------------

@dataclass(frozen=True)
class _Rules:
    """Family definition reduced to local clauses on adjacent parts."""

    allowed: Callable[[int], bool] | None = None
    repeatable: Callable[[int], bool] | None = None  # None: anything may repeat
    gap: int | None = None
    strict: Callable[[int], bool] | None = None  # gap must be < `gap` if either part is strict
    smallest_below: int | None = None

    @staticmethod
    def build(spec: FamilySpec) -> "_Rules":
        k, m = spec.kind, spec.modulus
        if k == "All":
            return _Rules()
        if k == "D":
            return _Rules(repeatable=lambda p: False)
        if k == "O":
            return _Rules(allowed=lambda p: p % 2 == 1)
        if k == "A1":
            return _Rules(repeatable=_even, gap=4, strict=_even, smallest_below=4)
        if k == "A2":
            return _Rules(allowed=lambda p: p % 4 != 0, repeatable=_even)
        res = frozenset(spec.residues)
        if k == "AO1":
            return _Rules(allowed=lambda p: p % m == 0 or p % m in res,
                          repeatable=lambda p: p % m == 0,
                          gap=m, strict=lambda p: p % m == 0, smallest_below=m)
        if k == "AO2":
            return _Rules(allowed=lambda p: p % m in res, repeatable=lambda p: False)
        if k in ("C1", "C2"):
            half = m // 2
            if k == "C1":
                return _Rules(allowed=lambda p: p % m == 0 or p % m in res,
                              repeatable=lambda p: p % half == 0,
                              gap=m, strict=lambda p: p % half == 0, smallest_below=m)
            return _Rules(allowed=lambda p: p % m in res,
                          repeatable=lambda p: p % half == 0)
        rep = frozenset(spec.repeatable)
        if k == "B1":
            special = lambda p: p % m == 0 or p % m in rep  # noqa: E731
            return _Rules(allowed=lambda p: p % m == 0 or p % m in res,
                          repeatable=special, gap=m, strict=special, smallest_below=m)
        return _Rules(allowed=lambda p: p % m in res, repeatable=lambda p: p % m in rep)


def _even(p: int) -> bool:
    return p % 2 == 0


def violation(spec: FamilySpec, p: Sequence[int]) -> str | None:
    """Name of the first family clause ``p`` breaks, or None if it is a member."""
    r = spec._rules
    p = tuple(p)
    if any(b > a for a, b in zip(p, p[1:])):
        return "parts must be nonincreasing"
    if r.allowed is not None:
        for x in p:
            if not r.allowed(x):
                return f"residue clause: part {x} is not allowed in {format_spec(spec)}"
    if r.repeatable is not None:
        for a, b in zip(p, p[1:]):
            if a == b and not r.repeatable(a):
                return f"repetition clause: part {a} may not be repeated in {format_spec(spec)}"
    if r.gap is not None:
        for a, b in zip(p, p[1:]):
            limit = r.gap - 1 if (r.strict(a) or r.strict(b)) else r.gap
            if a - b > limit:
                return (f"difference clause: successive parts {a},{b} differ by "
                        f"{a - b} > {limit} in {format_spec(spec)}")
    if r.smallest_below is not None and p and p[-1] >= r.smallest_below:
        return (f"smallest-part clause: smallest part {p[-1]} is not below "
                f"{r.smallest_below} in {format_spec(spec)}")
    return None


def contains(spec: FamilySpec, p: Sequence[int]) -> bool:
    return violation(spec, p) is None


# -- enumeration -------------------------------------------------------------

def enumerate_family(spec: FamilySpec, n: int) -> list[Partition]:
    """All members of ``spec`` with weight ``n``, in decreasing lexicographic order."""
    return list(iter_family(spec, n))


def iter_family(spec: FamilySpec, n: int) -> Iterator[Partition]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = spec._rules
    allowed, repeatable, gap, strict, below = (
        r.allowed, r.repeatable, r.gap, r.strict, r.smallest_below)
    prefix: list[int] = []

    def tail_floor(part: int) -> int:
        # lower bound on the weight still needed below `part` in gap families
        if below is None or part < below:
            return 0
        total, cur = 0, part
        while cur >= below:
            cur = max(cur - gap, 1)
            total += cur
        return total

    def rec(remaining: int, prev: int) -> Iterator[Partition]:
        if remaining == 0:
            if below is None or not prefix or prefix[-1] < below:
                yield tuple.__new__(Partition, prefix)
            return
        hi = min(remaining, prev) if prev else remaining
        lo = max(prev - gap, 1) if (gap is not None and prev) else 1
        for part in range(hi, lo - 1, -1):
            if allowed is not None and not allowed(part):
                continue
            if part == prev and repeatable is not None and not repeatable(part):
                continue
            if gap is not None and prev and prev - part == gap and (strict(prev) or strict(part)):
                continue
            if gap is not None and remaining - part < tail_floor(part):
                continue
            prefix.append(part)
            yield from rec(remaining - part, part)
            prefix.pop()

    return rec(n, 0)


def cardinality(spec: FamilySpec, n: int) -> int:
    return sum(1 for _ in iter_family(spec, n))


# -- statistics over a family ------------------------------------------------

SELECTORS = tuple(StatisticsBundle.SHORT_NAMES) + ("fine", "loc")


def stat_value(p: Partition, name: str, bundle: StatisticsBundle | None = None) -> int:
    """Value of the statistic ``name`` on ``p``.

    Besides the short names of :class:`StatisticsBundle` this understands
    ``fine`` = (largest - 1)/2 + length, defined for odd-part partitions, and
    ``loc`` = number of odd parts of the conjugate, computed from the conjugate.
    """
    if name == "fine":
        if not p:
            return 0
        if p[0] % 2 == 0:
            raise ValueError(f"'fine' needs an odd largest part, got ({format_partition(p)})")
        return (p[0] - 1) // 2 + len(p)
    if name == "loc":
        return odd_part_count(conjugate(p))
    if name not in StatisticsBundle.SHORT_NAMES:
        raise ValueError(f"unknown statistic {name!r}; choose from {', '.join(SELECTORS)}")
    bundle = bundle or statistics(p)
    return getattr(bundle, StatisticsBundle.SHORT_NAMES[name])


def stat_tuple(p: Partition, names: Sequence[str]) -> tuple[int, ...]:
    bundle = statistics(p)
    return tuple(stat_value(p, name, bundle) for name in names)


def joint_distribution(spec: FamilySpec, n: int, stats: Sequence[str]) -> Counter:
    """Multiset (as a Counter) of statistic tuples over the family at weight ``n``."""
    return Counter(stat_tuple(p, stats) for p in iter_family(spec, n))


# -- parameter sweeps --------------------------------------------------------

def residue_sets(modulus: int) -> list[tuple[int, ...]]:
    """Every nonempty subset of 1..modulus-1, by size then lexicographically."""
    pool = range(1, modulus)
    return [c for k in range(1, modulus) for c in combinations(pool, k)]


def ao_pairs(N: int) -> list[tuple[FamilySpec, FamilySpec]]:
    return [(ao(1, N, A), ao(2, N, A)) for A in residue_sets(N)]


def c_pairs(N: int) -> list[tuple[FamilySpec, FamilySpec]]:
    return [(c_family(1, N, A), c_family(2, N, A)) for A in residue_sets(2 * N)]


def b_pairs(N: int) -> list[tuple[FamilySpec, FamilySpec]]:
    """Every disjoint split A = Arep | Anon of every nonempty A."""
    out = []
    for A in residue_sets(N):
        for k in range(len(A) + 1):
            for rep in combinations(A, k):
                non = tuple(a for a in A if a not in rep)
                out.append((b_family(1, N, rep, non), b_family(2, N, rep, non)))
    return out
