"""The maps behind the refinement of Euler's theorem by (l_o, l_a).

    varphi : D(n)  -> A1(n)   2-modular conjugation
    psi    : O(n)  -> A2(n)   Glaisher-style splitting of multiplicities
    Phi    : C1(n) -> C2(n)   insertion algorithm, parts read modulo 2N
    delta  : D(n)  -> O(n)    psi^-1 . Phi . varphi  with N = 2, A = {1,2,3}

Every map validates its input family and raises :class:`DomainError`
naming the violated clause.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .families import FamilySpec, c_family, violation
from .partition import Partition, two_modular_conjugate


class DomainError(ValueError):
    """Input partition lies outside the domain of a map."""


@dataclass(frozen=True)
class InsertionParams:
    """Half-modulus ``N`` and residue set ``A`` (a subset of 1..2N-1)."""

    half_modulus: int
    residues: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(self.residues))
        # reuse the family validation for the residue set
        c_family(1, self.half_modulus, self.residues)

    @property
    def modulus(self) -> int:
        return 2 * self.half_modulus

    def c1(self) -> FamilySpec:
        return c_family(1, self.half_modulus, self.residues)

    def c2(self) -> FamilySpec:
        return c_family(2, self.half_modulus, self.residues)


EULER_PARAMS = InsertionParams(2, (1, 2, 3))


@dataclass(frozen=True)
class ExtractionPair:
    alpha: Partition
    beta: Partition

    @property
    def weight(self) -> int:
        return self.alpha.weight + self.beta.weight


def _require(spec: FamilySpec | str, p: Sequence[int], what: str) -> Partition:
    p = Partition(p)
    if isinstance(spec, str):
        spec = FamilySpec(spec)
    why = violation(spec, p)
    if why is not None:
        raise DomainError(f"{what}: ({p}) is not in {spec}: {why}")
    return p


def varphi(p: Sequence[int]) -> Partition:
    p = _require("D", p, "varphi")
    return two_modular_conjugate(p)


def varphi_inv(a: Sequence[int]) -> Partition:
    a = _require("A1", a, "varphi_inv")
    return two_modular_conjugate(a)


def psi(m: Sequence[int]) -> Partition:
    m = _require("O", m, "psi")
    parts: list[int] = []
    for value, mult in Counter(m).items():
        pairs, single = divmod(mult, 2)
        parts += [2 * value] * pairs + [value] * single
    return Partition(parts)


def psi_inv(b: Sequence[int]) -> Partition:
    b = _require("A2", b, "psi_inv")
    parts: list[int] = []
    for value in b:
        parts += [value // 2] * 2 if value % 2 == 0 else [value]
    return Partition(parts)


# -- insertion algorithm -----------------------------------------------------

def _difference_ok(upper: int, lower: int, N: int) -> bool:
    limit = 2 * N - 1 if (upper % N == 0 or lower % N == 0) else 2 * N
    return upper - lower <= limit


def _phase_one(parts: list[int], N: int) -> tuple[list[int], list[int]]:
    """Remove 2N-divisible parts whose removal keeps the difference clause.

    Candidates are visited largest first (leftmost among equals) and the
    scan restarts after every removal until nothing more can be removed.
    """
    M = 2 * N
    removed: list[int] = []
    while True:
        for j, part in enumerate(parts):
            if part % M:
                continue
            bigger = [x for x in parts[:j] if x > part]
            if not bigger:
                break
            if j + 1 < len(parts) and _difference_ok(bigger[-1], parts[j + 1], N):
                break
        else:
            return parts, removed
        removed.append(parts.pop(j))


def bessenrodt_extract(p: Sequence[int], params: InsertionParams) -> ExtractionPair:
    """Split a C1 partition into (alpha, beta), alpha in C1 and C2, beta in 2N-multiples."""
    p = _require(params.c1(), p, "extract")
    M = params.modulus
    alpha, beta = _phase_one(list(p), params.half_modulus)
    while True:
        # leftmost occurrence of the largest 2N-divisible part
        i = next((k for k, x in enumerate(alpha) if x % M == 0), None)
        if i is None:
            break
        value = alpha.pop(i)
        for k in range(i):
            alpha[k] -= M
        alpha.sort(reverse=True)
        beta.append(i * M + value)
    return ExtractionPair(Partition(alpha), Partition(beta))


def bessenrodt_insert(pair: ExtractionPair, params: InsertionParams) -> Partition:
    """Add 2N to the first beta_i/2N parts of alpha, for each beta_i."""
    M = params.modulus
    alpha, beta = Partition(pair.alpha), Partition(pair.beta)
    why = violation(params.c1(), alpha) or violation(params.c2(), alpha)
    if why:
        raise DomainError(f"insert: alpha ({alpha}) is not in C1 and C2: {why}")
    if any(b % M for b in beta):
        raise DomainError(f"insert: beta ({beta}) has a part not divisible by {M}")
    if beta and beta[0] > M * len(alpha):
        raise DomainError(f"insert: largest part of beta exceeds {M} * l(alpha) = {M * len(alpha)}")
    out = list(alpha)
    for b in beta:
        for k in range(b // M):
            out[k] += M
    return Partition(out)


def Phi(p: Sequence[int], params: InsertionParams = EULER_PARAMS) -> Partition:
    return bessenrodt_insert(bessenrodt_extract(p, params), params)


def inverse_extract(g: Sequence[int], params: InsertionParams) -> ExtractionPair:
    """First step of Phi_inv: peel multiples of 2N off the prefixes of a C2 partition."""
    g = _require(params.c2(), g, "Phi_inv")
    N, M = params.half_modulus, params.modulus
    alpha = list(g)
    beta: list[int] = []
    for t in range(len(alpha), 0, -1):
        below = alpha[t] if t < len(alpha) else 0
        d = alpha[t - 1] - below
        # remainder in [0, 2N) for multiples of N, in (0, 2N] otherwise
        i = d // M if alpha[t - 1] % N == 0 else max(d - 1, 0) // M
        if i:
            for k in range(t):
                alpha[k] -= i * M
            beta += [t * M] * i
    return ExtractionPair(Partition(alpha), Partition(beta))


def inverse_insert(pair: ExtractionPair, params: InsertionParams) -> Partition:
    """Second step of Phi_inv: insert beta into alpha, landing in C1."""
    M = params.modulus
    alpha = list(pair.alpha)
    beta = list(Partition(pair.beta))
    t = 0
    while t < len(beta) and alpha and beta[t] > alpha[0] + M - 1:
        b = beta[t]
        i = max(k for k in range(1, len(alpha) + 1) if b - k * M >= alpha[k - 1])
        for k in range(i):
            alpha[k] += M
        alpha.insert(i, b - i * M)
        alpha.sort(reverse=True)
        t += 1
    return Partition(alpha + beta[t:])


def Phi_inv(g: Sequence[int], params: InsertionParams = EULER_PARAMS) -> Partition:
    return inverse_insert(inverse_extract(g, params), params)


def delta(p: Sequence[int]) -> Partition:
    return psi_inv(Phi(varphi(p)))


def delta_inv(m: Sequence[int]) -> Partition:
    return varphi_inv(Phi_inv(psi(m)))


def delta_trace(p: Sequence[int]) -> tuple[Partition, Partition, Partition]:
    """(varphi image, Phi image, result) of the delta pipeline."""
    a = varphi(p)
    b = Phi(a)
    return a, b, psi_inv(b)
