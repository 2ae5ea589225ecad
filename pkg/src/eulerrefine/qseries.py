"""Exact truncated multivariate power series.

A :class:`TruncatedSeries` stores, for each grade ``g <= order``, a sparse
polynomial ``{monomial: int}``.  Monomials are exponent tuples over the
fixed variable order ``a, b, c, d, x, y, z``.  Two gradings are supported:

``"q"``
    the grade is the exponent of an implicit ``q`` (factored out);
``"abcd"``
    the grade is the total degree in ``a, b, c, d``.

Coefficients are Python ints, so nothing overflows.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Iterable, Mapping

from .families import FamilySpec, iter_family, parse_spec, stat_value
from .partition import Partition, boulet_weight_exponents, statistics

VARIABLES = ("a", "b", "c", "d", "x", "y", "z")
GRADINGS = ("q", "abcd")
_INDEX = {v: i for i, v in enumerate(VARIABLES)}

Monomial = tuple  # tuple of len(VARIABLES) ints
ONE_MONO: Monomial = (0,) * len(VARIABLES)


def mono(**exponents: int) -> Monomial:
    """Monomial from keyword exponents, e.g. ``mono(x=1, y=3)``."""
    e = [0] * len(VARIABLES)
    for name, k in exponents.items():
        e[_INDEX[name]] = k
    return tuple(e)


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(m1, m2))


def abcd_degree(m: Monomial) -> int:
    return m[0] + m[1] + m[2] + m[3]


def format_monomial(m: Monomial) -> str:
    out = [v if k == 1 else f"{v}^{k}" for v, k in zip(VARIABLES, m) if k]
    return "*".join(out) or "1"


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    grading: str = "q"
    terms: Mapping[int, Mapping[Monomial, int]] = field(default_factory=dict)

    def __post_init__(self):
        if self.grading not in GRADINGS:
            raise SeriesError(f"unknown grading {self.grading!r}")
        if self.order < 0:
            raise SeriesError("truncation order must be nonnegative")
        clean: dict[int, dict[Monomial, int]] = {}
        for g, poly in self.terms.items():
            if g < 0:
                raise SeriesError(f"negative grade {g}")
            if g > self.order:
                continue
            kept = {}
            for m, c in poly.items():
                if self.grading == "abcd" and abcd_degree(m) != g:
                    raise SeriesError(f"monomial {format_monomial(m)} stored at grade {g}")
                if c:
                    kept[tuple(m)] = c
            if kept:
                clean[g] = kept
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls, order: int, grading: str = "q") -> "TruncatedSeries":
        return cls(order, grading, {0: {ONE_MONO: 1}})

    @classmethod
    def zero(cls, order: int, grading: str = "q") -> "TruncatedSeries":
        return cls(order, grading, {})

    def coefficient(self, grade: int) -> dict[Monomial, int]:
        return dict(self.terms.get(grade, {}))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return bool(series_equal(self, other))

    __hash__ = None

    def format_grade(self, grade: int) -> str:
        poly = self.terms.get(grade, {})
        if not poly:
            return "0"
        items = sorted(poly.items(), reverse=True)
        return " + ".join(
            format_monomial(m) if c == 1 else f"{c}*{format_monomial(m)}" for m, c in items
        )


def _check_compatible(s: TruncatedSeries, t: TruncatedSeries) -> None:
    if s.order != t.order or s.grading != t.grading:
        raise SeriesError(
            f"incompatible series: order {s.order}/{t.order}, grading {s.grading}/{t.grading}")


def series_add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(s, t)
    out: dict[int, dict[Monomial, int]] = {g: dict(p) for g, p in s.terms.items()}
    for g, poly in t.terms.items():
        acc = out.setdefault(g, {})
        for m, c in poly.items():
            acc[m] = acc.get(m, 0) + c
    return TruncatedSeries(s.order, s.grading, out)


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, discarding grades above the truncation order."""
    _check_compatible(s, t)
    out: dict[int, dict[Monomial, int]] = defaultdict(dict)
    for g1, p1 in s.terms.items():
        for g2, p2 in t.terms.items():
            g = g1 + g2
            if g > s.order:
                continue
            acc = out[g]
            for m1, c1 in p1.items():
                for m2, c2 in p2.items():
                    m = mono_mul(m1, m2)
                    acc[m] = acc.get(m, 0) + c1 * c2
    return TruncatedSeries(s.order, s.grading, out)


@dataclass(frozen=True)
class Comparison:
    """Result of :func:`series_equal`; falsy when a coefficient differs."""

    equal: bool
    grade: int | None = None
    monomial: Monomial | None = None
    left: int = 0
    right: int = 0

    def __bool__(self) -> bool:
        return self.equal

    def describe(self) -> str:
        if self.equal:
            return "equal"
        return (f"first difference at grade {self.grade}, monomial "
                f"{format_monomial(self.monomial)}: {self.left} != {self.right}")


def series_equal(s: TruncatedSeries, t: TruncatedSeries) -> Comparison:
    _check_compatible(s, t)
    for g in range(s.order + 1):
        p1, p2 = s.terms.get(g, {}), t.terms.get(g, {})
        if p1 == p2:
            continue
        for m in sorted(set(p1) | set(p2)):
            if p1.get(m, 0) != p2.get(m, 0):
                return Comparison(False, g, m, p1.get(m, 0), p2.get(m, 0))
    return Comparison(True)


# -- products ----------------------------------------------------------------

@dataclass(frozen=True)
class Factor:
    """``(1 + m q^k)`` when ``kind == "plus"``, ``1/(1 - m q^k)`` when ``"geom"``.

    Under abcd grading ``k`` must equal the total degree of ``m``.
    """

    kind: str
    monomial: Monomial
    grade: int

    def __post_init__(self):
        if self.kind not in ("plus", "geom"):
            raise SeriesError(f"unknown factor kind {self.kind!r}")
        if self.grade <= 0:
            raise SeriesError("factor grade must be positive")


def expand_product(factors: Iterable[Factor], order: int, grading: str = "q") -> TruncatedSeries:
    # multiply in place: (1 + m q^k) runs grades downward, 1/(1 - m q^k) upward
    terms: dict[int, dict[Monomial, int]] = {0: {ONE_MONO: 1}}
    for f in factors:
        if f.grade <= 0:
            raise SeriesError("factor grade must be positive")
        if grading == "abcd" and abcd_degree(f.monomial) != f.grade:
            raise SeriesError("abcd-graded factor grade must equal its abcd degree")
        k = f.grade
        if k > order:
            continue
        grades = range(order, k - 1, -1) if f.kind == "plus" else range(k, order + 1)
        for g in grades:
            src = terms.get(g - k)
            if not src:
                continue
            acc = terms.setdefault(g, {})
            for m, c in src.items():
                mm = mono_mul(m, f.monomial)
                acc[mm] = acc.get(mm, 0) + c
    return TruncatedSeries(order, grading, terms)


def _abcd(a, b, c, d):
    m = mono(a=a, b=b, c=c, d=d)
    return m, a + b + c + d


def boulet_factors(order: int) -> list[Factor]:
    """Product side of the Boulet generating function over all partitions."""
    out = []
    for j in range(1, order + 1):
        for kind, exps in (
            ("plus", (j, j - 1, j - 1, j - 1)),
            ("plus", (j, j, j, j - 1)),
            ("geom", (j, j, j, j)),
            ("geom", (j, j, j - 1, j - 1)),
            ("geom", (j, j - 1, j, j - 1)),
        ):
            m, k = _abcd(*exps)
            if k <= order:
                out.append(Factor(kind, m, k))
    return out


def boulet_distinct_factors(order: int) -> list[Factor]:
    out = []
    for j in range(1, order + 1):
        for kind, exps in (
            ("plus", (j, j - 1, j - 1, j - 1)),
            ("plus", (j, j, j, j - 1)),
            ("geom", (j, j, j - 1, j - 1)),
        ):
            m, k = _abcd(*exps)
            if k <= order:
                out.append(Factor(kind, m, k))
    return out


def even_multiplicity_factors(order: int) -> list[Factor]:
    """Boulet weight over partitions whose parts all have even multiplicity."""
    out = []
    for j in range(1, order + 1):
        for exps in ((j, j, j, j), (j, j - 1, j, j - 1)):
            m, k = _abcd(*exps)
            if k <= order:
                out.append(Factor("geom", m, k))
    return out


def andrews_factors(order: int) -> list[Factor]:
    """prod (1 + xy q^(2j-1)) / ((1 - q^(4j)) (1 - x^2 q^(4j-2)) (1 - y^2 q^(4j-2)))."""
    out = []
    for j in range(1, order + 1):
        out += [
            Factor("plus", mono(x=1, y=1), 2 * j - 1),
            Factor("geom", ONE_MONO, 4 * j),
            Factor("geom", mono(x=2), 4 * j - 2),
            Factor("geom", mono(y=2), 4 * j - 2),
        ]
    return [f for f in out if f.grade <= order]


def odd_chain_factors(order: int) -> list[Factor]:
    """prod (1 + xy q^(2j-1)) / (1 - y^2 q^(4j-2))."""
    out = []
    for j in range(1, order + 1):
        out += [Factor("plus", mono(x=1, y=1), 2 * j - 1), Factor("geom", mono(y=2), 4 * j - 2)]
    return [f for f in out if f.grade <= order]


PRODUCTS: dict[str, Callable[[int], list[Factor]]] = {
    "boulet": boulet_factors,
    "boulet_distinct": boulet_distinct_factors,
    "even_multiplicity": even_multiplicity_factors,
    "andrews": andrews_factors,
    "odd_chain": odd_chain_factors,
}


# -- sums over families ------------------------------------------------------

def parse_selector(text: str) -> dict[str, str] | str:
    """``"x=lo,y=la"`` -> ``{"x": "lo", "y": "la"}``; ``"omega"`` stays a string."""
    text = "".join(text.split())
    if text == "omega":
        return "omega"
    out: dict[str, str] = {}
    for item in filter(None, text.split(",")):
        var, sep, stat = item.partition("=")
        if not sep or var not in _INDEX or var in "abcd":
            raise SeriesError(f"bad selector item {item!r}; use x, y or z")
        out[var] = stat
    return out


def selector_monomial(p: Partition, selector: Mapping[str, str] | str) -> Monomial:
    if selector == "omega":
        a, b, c, d = boulet_weight_exponents(p)
        return mono(a=a, b=b, c=c, d=d)
    bundle = statistics(p)
    return mono(**{var: stat_value(p, stat, bundle) for var, stat in selector.items()})


FILTERS: dict[str, Callable[[Partition], bool]] = {
    "even_multiplicities": lambda p: all(m % 2 == 0 for m in p.multiplicities().values()),
}


def family_sum(
    spec: FamilySpec | str,
    selector: Mapping[str, str] | str,
    order: int,
    grading: str = "q",
    where: Callable[[Partition], bool] | None = None,
) -> TruncatedSeries:
    """Sum of ``selector(p) q^|p|`` over family members of weight ``<= order``."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(selector, str) and selector != "omega":
        selector = parse_selector(selector)
    terms: dict[int, dict[Monomial, int]] = {}
    for n in range(order + 1):
        acc: dict[Monomial, int] = {}
        for p in iter_family(spec, n):
            if where is not None and not where(p):
                continue
            m = selector_monomial(p, selector)
            acc[m] = acc.get(m, 0) + 1
        terms[n] = acc
    return TruncatedSeries(order, grading, terms)


def substitute_boulet(s: TruncatedSeries) -> TruncatedSeries:
    """Apply a->xyq, b->y q/x, c->x q/y, d->q/(xy) to an abcd-graded series.

    Intermediate exponents of x and y may be negative; the result must not
    keep any, otherwise :class:`SeriesError` is raised.
    """
    if s.grading != "abcd":
        raise SeriesError("substitution needs an abcd-graded series")
    terms: dict[int, dict[Monomial, int]] = {}
    for g, poly in s.terms.items():
        acc: dict[Monomial, int] = {}
        for m, c in poly.items():
            a, b, cc, d = m[:4]
            xe = m[4] + a - b + cc - d
            ye = m[5] + a + b - cc - d
            if xe < 0 or ye < 0:
                raise SeriesError(f"negative exponent survives substitution at grade {g}")
            key = mono(x=xe, y=ye, z=m[6])
            acc[key] = acc.get(key, 0) + c
        terms[g] = acc
    return TruncatedSeries(s.order, "q", terms)


# -- identity manifest -------------------------------------------------------

@dataclass(frozen=True)
class Side:
    family: str | None = None
    selector: str | None = None
    where: str | None = None
    product: str | None = None
    substitute: bool = False

    def build(self, order: int, grading: str) -> TruncatedSeries:
        if self.product is not None:
            src_grading = "abcd" if self.substitute else grading
            s = expand_product(PRODUCTS[self.product](order), order, src_grading)
        else:
            where = FILTERS[self.where] if self.where else None
            src_grading = "abcd" if self.substitute else grading
            s = family_sum(self.family, self.selector, order, src_grading, where)
        return substitute_boulet(s) if self.substitute else s


@dataclass(frozen=True)
class Identity:
    id: str
    title: str
    grading: str
    order: int
    lhs: Side
    rhs: Side

    def sides(self, order: int | None = None) -> tuple[TruncatedSeries, TruncatedSeries]:
        Q = self.order if order is None else order
        return self.lhs.build(Q, self.grading), self.rhs.build(Q, self.grading)

    def check(self, order: int | None = None) -> Comparison:
        return series_equal(*self.sides(order))


def load_manifest(path=None) -> dict[str, Identity]:
    """Read the identity catalogue (the packaged ``identities.json`` by default)."""
    if path is None:
        text = resources.files(__package__).joinpath("identities.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    raw = json.loads(text)
    out = {}
    for ident, entry in raw.items():
        out[ident] = Identity(
            id=ident,
            title=entry["title"],
            grading=entry["grading"],
            order=entry["order"],
            lhs=Side(**entry["lhs"]),
            rhs=Side(**entry["rhs"]),
        )
    return out
