"""Integer partitions and the statistics used throughout the package.

A partition is stored as a nonincreasing tuple of positive integers.  The
text form accepted by :func:`parse_partition` is a comma separated list of
parts with optional caret multiplicities, e.g. ``"3^2,5^3,9^2,13,19"``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable


class Partition(tuple):
    """An immutable integer partition, parts in nonincreasing order."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        bad = [p for p in parts if p < 1]
        if bad:
            raise ValueError(f"partition parts must be positive integers, got {bad[0]}")
        parts.sort(reverse=True)
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def largest(self) -> int:
        return self[0] if self else 0

    def multiplicities(self) -> dict[int, int]:
        """Part value -> multiplicity, keys in decreasing order."""
        return dict(Counter(self))

    def is_distinct(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def is_odd(self) -> bool:
        return all(p % 2 for p in self)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


def make_partition(parts: Iterable[int] = ()) -> Partition:
    return Partition(parts)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"17,16,14"`` or ``"1,3,7^2,9,15"`` (whitespace ignored)."""
    text = "".join(text.split())
    if not text:
        return Partition()
    parts = []
    for token in text.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"bad partition token {token!r}")
        value = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        if value < 1:
            raise ValueError(f"partition parts must be positive integers, got {value}")
        parts.extend([value] * mult)
    return Partition(parts)


def format_partition(p: Iterable[int], *, compact: bool = False) -> str:
    """Inverse of :func:`parse_partition`.

    With ``compact=True`` repeated parts are written with carets in
    increasing order of value, the way the worked examples print them
    (``3^2,5^3,9^2,13,19``).
    """
    p = tuple(p)
    if not compact:
        return ",".join(str(x) for x in p)
    counts = Counter(p)
    return ",".join(
        str(v) if m == 1 else f"{v}^{m}" for v, m in sorted(counts.items())
    )


def conjugate(p: Iterable[int]) -> Partition:
    p = tuple(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def two_modular_conjugate(p: Iterable[int]) -> Partition:
    """Column sums of the 2-modular diagram of ``p``.

    Row ``i`` has ``ceil(p_i / 2)`` cells, all equal to 2 except a trailing
    1 when ``p_i`` is odd.
    """
    p = tuple(p)
    if not p:
        return Partition()
    columns = [0] * ((p[0] + 1) // 2)
    for part in p:
        full, odd = divmod(part, 2)
        for j in range(full):
            columns[j] += 2
        if odd:
            columns[full] += 1
    return Partition(c for c in columns if c)


def alternating_sum(p: Iterable[int]) -> int:
    p = tuple(p)
    return sum(p[0::2]) - sum(p[1::2])


def odd_part_count(p: Iterable[int]) -> int:
    return sum(1 for x in p if x % 2)


def chain_count(p: Iterable[int]) -> int:
    """Maximal runs of consecutive integers among the distinct part values."""
    values = sorted(set(p))
    return sum(1 for i, v in enumerate(values) if i == 0 or values[i - 1] != v - 1)


def distinct_count(p: Iterable[int]) -> int:
    return len(set(p))


def odd_multiplicity_count(p: Iterable[int]) -> int:
    return sum(1 for m in Counter(p).values() if m % 2)


def r2(p: Iterable[int]) -> int:
    """Number of parts congruent to 2 modulo 4."""
    return sum(1 for x in p if x % 4 == 2)


def boulet_weight_exponents(p: Iterable[int]) -> tuple[int, int, int, int]:
    """Exponents of ``a, b, c, d`` in the Boulet weight of ``p``.

    Odd-indexed parts (1st, 3rd, ...) feed ``a`` with their ceiling half and
    ``b`` with their floor half; even-indexed parts feed ``c`` and ``d``.
    """
    p = tuple(p)
    odd_pos, even_pos = p[0::2], p[1::2]
    return (
        sum((x + 1) // 2 for x in odd_pos),
        sum(x // 2 for x in odd_pos),
        sum((x + 1) // 2 for x in even_pos),
        sum(x // 2 for x in even_pos),
    )


@dataclass(frozen=True)
class StatisticsBundle:
    weight: int
    length: int
    largest: int
    alt_sum: int
    odd_parts: int
    chains: int
    distinct: int
    odd_mult_parts: int
    r2: int
    boulet_exponents: tuple[int, int, int, int]

    # short names used by selectors, the CLI and the JSON output
    SHORT_NAMES = {
        "l": "length",
        "la": "alt_sum",
        "lo": "odd_parts",
        "nc": "chains",
        "nd": "distinct",
        "no": "odd_mult_parts",
        "r2": "r2",
        "largest": "largest",
        "weight": "weight",
    }

    def short(self) -> dict[str, int]:
        return {k: getattr(self, v) for k, v in self.SHORT_NAMES.items() if k != "weight"}


def statistics(p: Iterable[int]) -> StatisticsBundle:
    p = Partition(p) if not isinstance(p, Partition) else p
    return StatisticsBundle(
        weight=p.weight,
        length=len(p),
        largest=p.largest,
        alt_sum=alternating_sum(p),
        odd_parts=odd_part_count(p),
        chains=chain_count(p),
        distinct=distinct_count(p),
        odd_mult_parts=odd_multiplicity_count(p),
        r2=r2(p),
        boulet_exponents=boulet_weight_exponents(p),
    )
