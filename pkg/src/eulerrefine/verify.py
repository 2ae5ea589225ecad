"""Exhaustive verification suites.

Each suite returns a list of :class:`CheckResult`; a result carries the
first failing witness when something does not hold.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import bijections as bj
from .families import (
    FamilySpec,
    ao_pairs,
    b_pairs,
    c_pairs,
    cardinality,
    contains,
    enumerate_family,
    joint_distribution,
)
from .partition import statistics
from .qseries import load_manifest

SUITES = ("bijections", "counting", "series", "refinements")


@dataclass
class CheckResult:
    suite: str
    name: str
    checks: int = 0
    witness: str | None = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.witness is None

    def line(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        text = f"[{status}] {self.suite}/{self.name}: {self.checks} checks ({self.seconds:.2f}s)"
        if not self.ok:
            text += f"\n    witness: {self.witness}"
        return text


class _Fail(Exception):
    pass


def _run(suite: str, name: str, body: Callable[[], Iterator[None]]) -> CheckResult:
    """Drive a generator of checks; each ``yield`` counts one passed check."""
    res = CheckResult(suite, name)
    t0 = time.perf_counter()
    try:
        for _ in body():
            res.checks += 1
    except _Fail as e:
        res.witness = str(e)
    except ValueError as e:  # a map rejected an input it should accept
        res.witness = f"unexpected error: {e}"
    res.seconds = time.perf_counter() - t0
    return res


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise _Fail(msg)


D, O, A1, A2 = FamilySpec("D"), FamilySpec("O"), FamilySpec("A1"), FamilySpec("A2")


# -- bijections --------------------------------------------------------------

def _bijective(name, n, f, source, target):
    images = {}
    for p in source:
        q = f(p)
        _expect(q.weight == p.weight, f"{name}: n={n} ({p}) -> ({q}) changes weight")
        _expect(q in target, f"{name}: n={n} ({p}) -> ({q}) lands outside the target family")
        _expect(q not in images, f"{name}: n={n} ({p}) and ({images.get(q)}) both map to ({q})")
        images[q] = p
    _expect(len(images) == len(target),
            f"{name}: n={n} image has {len(images)} elements, target has {len(target)}")
    return images


def check_delta(max_n: int) -> Iterator[None]:
    for n in range(max_n + 1):
        ds, os_ = enumerate_family(D, n), set(enumerate_family(O, n))
        _bijective("delta", n, bj.delta, ds, os_)
        yield
        for p in ds:
            m = bj.delta(p)
            sp, sm = statistics(p), statistics(m)
            _expect(sp.odd_parts == sm.odd_mult_parts and sp.alt_sum == sm.length,
                    f"delta: n={n} ({p}) -> ({m}) has (lo, la)=({sp.odd_parts},{sp.alt_sum}) "
                    f"but (no, l)=({sm.odd_mult_parts},{sm.length})")
            _expect(bj.delta_inv(m) == p, f"delta_inv(delta({p})) != ({p})")
            yield
        for m in os_:
            _expect(bj.delta(bj.delta_inv(m)) == m, f"delta(delta_inv({m})) != ({m})")
            yield


def check_varphi(max_n: int) -> Iterator[None]:
    for n in range(max_n + 1):
        ds = enumerate_family(D, n)
        _bijective("varphi", n, bj.varphi, ds, set(enumerate_family(A1, n)))
        for p in ds:
            a = bj.varphi(p)
            sp, sa = statistics(p), statistics(a)
            _expect(sp.odd_parts == sa.odd_parts and sp.alt_sum == 2 * sa.r2 + sa.odd_parts,
                    f"varphi: n={n} ({p}) -> ({a}) breaks lo=lo, la=2 r2 + lo")
            _expect(bj.varphi_inv(a) == p, f"varphi_inv(varphi({p})) != ({p})")
            yield


def check_psi(max_n: int) -> Iterator[None]:
    for n in range(max_n + 1):
        os_ = enumerate_family(O, n)
        _bijective("psi", n, bj.psi, os_, set(enumerate_family(A2, n)))
        for m in os_:
            b = bj.psi(m)
            sm, sb = statistics(m), statistics(b)
            _expect(sm.odd_mult_parts == sb.odd_parts and sm.length == 2 * sb.r2 + sb.odd_parts,
                    f"psi: n={n} ({m}) -> ({b}) breaks no=lo, l=2 r2 + lo")
            _expect(bj.psi_inv(b) == m, f"psi_inv(psi({m})) != ({m})")
            yield


def check_phi_euler(max_n: int) -> Iterator[None]:
    """Phi on A1 -> A2 with N=2, A={1,2,3}: bijective and keeps (lo, r2)."""
    for n in range(max_n + 1):
        src = enumerate_family(A1, n)
        _bijective("Phi", n, bj.Phi, src, set(enumerate_family(A2, n)))
        for a in src:
            b = bj.Phi(a)
            sa, sb = statistics(a), statistics(b)
            _expect(sa.odd_parts == sb.odd_parts and sa.r2 == sb.r2,
                    f"Phi: n={n} ({a}) -> ({b}) changes (lo, r2)")
            _expect(bj.Phi_inv(b) == a, f"Phi_inv(Phi({a})) != ({a})")
            yield


def check_phi_sweep(max_n: int, half_moduli=(1, 2, 3)) -> Iterator[None]:
    """Phi for every N and every nonempty residue set A of 1..2N-1."""
    for N in half_moduli:
        for c1, _ in c_pairs(N):
            params = bj.InsertionParams(N, c1.residues)
            for n in range(max_n + 1):
                src = enumerate_family(params.c1(), n)
                tgt = set(enumerate_family(params.c2(), n))
                f = lambda p: bj.Phi(p, params)  # noqa: E731
                _bijective(f"Phi[{c1}]", n, f, src, tgt)
                for p in src:
                    pair = bj.bessenrodt_extract(p, params)
                    M = params.modulus
                    _expect(not pair.beta or pair.beta[0] <= M * len(pair.alpha),
                            f"extract[{c1}]: ({p}) gives beta_1 > 2N l(alpha)")
                    _expect(contains(params.c1(), pair.alpha) and contains(params.c2(), pair.alpha),
                            f"extract[{c1}]: ({p}) gives alpha=({pair.alpha}) outside C1 and C2")
                    _expect(bj.Phi_inv(bj.Phi(p, params), params) == p,
                            f"Phi_inv[{c1}](Phi({p})) != ({p})")
                    yield


def bijection_suite(max_n: int = 26, sweep_n: int = 20) -> list[CheckResult]:
    s = "bijections"
    return [
        _run(s, "delta D->O (lo,la)->(no,l)", lambda: check_delta(max_n)),
        _run(s, "varphi D->A1", lambda: check_varphi(max_n)),
        _run(s, "psi O->A2", lambda: check_psi(max_n)),
        _run(s, "Phi A1->A2 (lo,r2)", lambda: check_phi_euler(max_n)),
        _run(s, "Phi C1->C2 sweep N=1..3", lambda: check_phi_sweep(min(max_n, sweep_n))),
    ]


# -- counting ----------------------------------------------------------------

def _equal_counts(name: str, pairs, max_n: int) -> Iterator[None]:
    for left, right in pairs:
        for n in range(max_n + 1):
            a, b = cardinality(left, n), cardinality(right, n)
            _expect(a == b, f"{name}: n={n} |{left}|={a} but |{right}|={b}")
            yield


def counting_suite(max_n: int = 26) -> list[CheckResult]:
    s = "counting"
    ao = [p for N in (2, 3, 4, 5) for p in ao_pairs(N)]
    bb = [p for N in (2, 3, 4, 5) for p in b_pairs(N)]
    cc = [p for N in (1, 2, 3) for p in c_pairs(N)]
    return [
        _run(s, "Euler |D|=|O|", lambda: _equal_counts("Euler", [(D, O)], max_n)),
        _run(s, "Andrews-Olsson AO1=AO2 N=2..5", lambda: _equal_counts("AO", ao, max_n)),
        _run(s, "Bessenrodt B1=B2 N=2..5", lambda: _equal_counts("B", bb, max_n)),
        _run(s, "C1=C2 N=1..3", lambda: _equal_counts("C", cc, max_n)),
    ]


# -- refinements -------------------------------------------------------------

REFINEMENTS = {
    "Sylvester nc~nd": (["nc"], ["nd"]),
    "Fine largest~fine": (["largest"], ["fine"]),
    "Bessenrodt la~l": (["la"], ["l"]),
    "Sylvester-Bessenrodt (largest,la,nc)~(fine,l,nd)": (["largest", "la", "nc"], ["fine", "l", "nd"]),
    "Glaisher lo~no": (["lo"], ["no"]),
    "main (lo,la)~(no,l)": (["lo", "la"], ["no", "l"]),
}


def _equidistributed(name: str, left_stats, right_stats, max_n: int) -> Iterator[None]:
    for n in range(max_n + 1):
        a = joint_distribution(D, n, left_stats)
        b = joint_distribution(O, n, right_stats)
        if a != b:
            diff = sorted((a - b) + (b - a))[0]
            raise _Fail(f"{name}: n={n} tuple {diff} has multiplicity "
                        f"{a.get(diff, 0)} over D but {b.get(diff, 0)} over O")
        yield


def refinement_suite(max_n: int = 26) -> list[CheckResult]:
    return [
        _run("refinements", name, lambda l=l, r=r, name=name: _equidistributed(name, l, r, max_n))
        for name, (l, r) in REFINEMENTS.items()
    ]


# -- series ------------------------------------------------------------------

def series_suite(order: int | None = None, ids=None) -> list[CheckResult]:
    """Check catalogued identities; ``order`` caps each identity's default order."""
    out = []
    for ident in load_manifest().values():
        if ids is not None and ident.id not in ids:
            continue
        Q = ident.order if order is None else min(order, ident.order)

        def body(ident=ident, Q=Q):
            cmp = ident.check(Q)
            _expect(bool(cmp), f"{ident.id}: {cmp.describe()}")
            yield

        res = _run("series", f"{ident.id} to {ident.grading}-grade {Q}", body)
        out.append(res)
    return out


def run_suite(name: str, max_n: int = 26, order: int | None = 30) -> list[CheckResult]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, max_n, order)]
    if name == "bijections":
        return bijection_suite(max_n)
    if name == "counting":
        return counting_suite(max_n)
    if name == "refinements":
        return refinement_suite(max_n)
    if name == "series":
        return series_suite(order)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")

