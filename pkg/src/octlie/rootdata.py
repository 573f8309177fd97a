"""Root data for Sp6 (type C3), its compact Levi U(3), and G2.

Sp6 weights are integer triples in the e-basis.  G2 weights are pairs in the
(eps1, eps2) basis with a = eps1 - 3 eps2, b = 2 eps2 and invariant form
diag(3, 1); in these coordinates rho = 3a + 5b = (3, 1) and the compact
positive roots b, 2a + 3b are 2 eps2, 2 eps1.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .exactmath import LaurentPoly

Vec = Tuple[int, ...]

MAX_LAMBDA1_ENV = "OCTLIE_MAX_LAMBDA1"


def max_lambda1() -> int:
    """Desk-scale bound on lambda_1 for symbolic characters (env override)."""
    return int(os.environ.get(MAX_LAMBDA1_ENV, "6"))


class BoundExceeded(ValueError):
    pass


class NotDominant(ValueError):
    pass


# ---------------------------------------------------------------------------
# root systems


@dataclass(frozen=True)
class RootSystem:
    kind: str
    positive: Tuple[Vec, ...]
    compact_positive: Tuple[Vec, ...]
    simple: Tuple[Vec, ...]
    form: Tuple[int, ...]  # diagonal of the invariant form

    def pair(self, u: Sequence[object], v: Sequence[object]):
        return sum(f * a * b for f, a, b in zip(self.form, u, v))

    @property
    def rho(self) -> Tuple[Fraction, ...]:
        n = len(self.form)
        return tuple(Fraction(sum(r[i] for r in self.positive), 2) for i in range(n))

    @property
    def rho_c(self) -> Tuple[Fraction, ...]:
        n = len(self.form)
        return tuple(Fraction(sum(r[i] for r in self.compact_positive), 2) for i in range(n))

    @property
    def roots(self) -> Tuple[Vec, ...]:
        return self.positive + tuple(tuple(-x for x in r) for r in self.positive)

    @property
    def noncompact_positive(self) -> Tuple[Vec, ...]:
        return tuple(r for r in self.positive if r not in self.compact_positive)

    def reflect(self, alpha: Sequence[int], v: Sequence[object]) -> Tuple:
        c = Fraction(2 * self.pair(v, alpha), self.pair(alpha, alpha))
        out = tuple(x - c * a for x, a in zip(v, alpha))
        return tuple(int(x) if Fraction(x).denominator == 1 else x for x in out)


C3 = RootSystem(
    "C3",
    positive=((1, -1, 0), (1, 0, -1), (0, 1, -1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (2, 0, 0), (0, 2, 0), (0, 0, 2)),
    compact_positive=((1, -1, 0), (1, 0, -1), (0, 1, -1)),
    simple=((1, -1, 0), (0, 1, -1), (0, 0, 2)),
    form=(1, 1, 1),
)

A2_COMPACT = RootSystem(
    "A2compact",
    positive=((1, -1, 0), (1, 0, -1), (0, 1, -1)),
    compact_positive=((1, -1, 0), (1, 0, -1), (0, 1, -1)),
    simple=((1, -1, 0), (0, 1, -1)),
    form=(1, 1, 1),
)

G2_A = (1, -3)
G2_B = (0, 2)
G2 = RootSystem(
    "G2",
    positive=(G2_A, G2_B, (1, -1), (1, 1), (1, 3), (2, 0)),
    compact_positive=(G2_B, (2, 0)),
    simple=(G2_A, G2_B),
    form=(3, 1),
)

G2_ROOT_NAMES = {G2_A: "a", G2_B: "b", (1, -1): "a+b", (1, 1): "a+2b", (1, 3): "a+3b", (2, 0): "2a+3b"}


def root_system(kind: str) -> RootSystem:
    return {"C3": C3, "G2": G2, "A2compact": A2_COMPACT}[kind]


# ---------------------------------------------------------------------------
# Weyl groups


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element stored as its matrix on coordinates."""

    matrix: Tuple[Tuple[object, ...], ...]
    length: int
    name: str = ""

    def __call__(self, v: Sequence[object]) -> Tuple:
        return tuple(_norm(sum(m * x for m, x in zip(row, v))) for row in self.matrix)

    def compose(self, other: "WeylElement", rs: RootSystem) -> "WeylElement":
        n = len(self.matrix)
        M = tuple(tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n)) for j in range(n)) for i in range(n))
        return _make(M, rs, f"{self.name}{other.name}")


def _length(M, rs: RootSystem) -> int:
    """Number of positive roots alpha with w^-1 alpha negative = #{alpha > 0 : <alpha, w rho> < 0}."""
    w = WeylElement(M, 0)
    wr = w(rs.rho)
    return sum(1 for a in rs.positive if rs.pair(a, wr) < 0)


def _make(M, rs, name="") -> WeylElement:
    return WeylElement(M, _length(M, rs), name)


def _reflection_matrix(rs: RootSystem, alpha) -> Tuple[Tuple[int, ...], ...]:
    n = len(rs.form)
    cols = [rs.reflect(alpha, tuple(int(i == j) for i in range(n))) for j in range(n)]
    return tuple(tuple(_norm(cols[j][i]) for j in range(n)) for i in range(n))


def _norm(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


@lru_cache(maxsize=None)
def weyl_group(kind: str) -> Tuple[WeylElement, ...]:
    """All elements, generated by simple reflections, sorted by length."""
    rs = root_system(kind)
    n = len(rs.form)
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    gens = [_reflection_matrix(rs, a) for a in rs.simple]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            for G in gens:
                P = tuple(tuple(sum(G[i][k] * M[k][j] for k in range(n)) for j in range(n)) for i in range(n))
                if P not in seen:
                    seen.add(P)
                    nxt.append(P)
        frontier = nxt
    els = [_make(M, rs) for M in seen]
    els.sort(key=lambda w: (w.length, tuple(-x for x in w(rs.rho))))
    return tuple(els)


def compact_weyl_group(kind: str) -> Tuple[WeylElement, ...]:
    """Subgroup generated by reflections in compact roots."""
    rs = root_system(kind)
    comp = set()
    for w in weyl_group(kind):
        # w lies in W_K iff it permutes the compact roots and fixes the K chamber orbit
        if all(_is_root(w(a), rs.compact_positive) for a in rs.compact_positive):
            comp.add(w)
    # keep only those generated by compact reflections
    n = len(rs.form)
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    gens = [_reflection_matrix(rs, a) for a in rs.compact_positive]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            for G in gens:
                P = tuple(tuple(sum(G[i][k] * M[k][j] for k in range(n)) for j in range(n)) for i in range(n))
                if P not in seen:
                    seen.add(P)
                    nxt.append(P)
        frontier = nxt
    return tuple(w for w in weyl_group(kind) if w.matrix in seen)


def _is_root(v, pos) -> bool:
    v = tuple(v)
    return v in pos or tuple(-x for x in v) in pos


def is_k_dominant(rs: RootSystem, v: Sequence[object]) -> bool:
    return all(rs.pair(a, v) > 0 for a in rs.compact_positive)


@lru_cache(maxsize=None)
def coset_representatives(kind: str) -> Tuple[WeylElement, ...]:
    """Representatives w of W/W_K with w rho K-dominant, by increasing length.

    Ties in length are broken by the lexicographic order of w rho.  For C3
    this reproduces w1..w8; for G2 it gives id, w_a and w_a w_b.
    """
    rs = root_system(kind)
    reps = [w for w in weyl_group(kind) if is_k_dominant(rs, w(rs.rho))]
    reps.sort(key=lambda w: (w.length, tuple(w(rs.rho))))
    return tuple(WeylElement(w.matrix, w.length, f"w{i + 1}") for i, w in enumerate(reps))


def simple_reflection(kind: str, which: str) -> WeylElement:
    rs = root_system(kind)
    alpha = {"a": G2_A, "b": G2_B}[which] if kind == "G2" else rs.simple[int(which)]
    return _make(_reflection_matrix(rs, alpha), rs, f"w_{which}")


# ---------------------------------------------------------------------------
# dimensions, characters, multiplicities


def _check_dominant_c3(lam: Sequence[int]):
    if not (lam[0] >= lam[1] >= lam[2] >= 0):
        raise NotDominant(f"{tuple(lam)} is not dominant for Sp6")


def weyl_dimension(rs: RootSystem, lam: Sequence[int]) -> int:
    lam = tuple(lam)
    if any(rs.pair(lam, a) < 0 for a in rs.simple):
        raise NotDominant(f"{lam} is not dominant")
    rho = rs.rho
    num = Fraction(1)
    for a in rs.positive:
        num *= Fraction(rs.pair(tuple(l + r for l, r in zip(lam, rho)), a)) / rs.pair(rho, a)
    assert num.denominator == 1
    return int(num)


def gl3_dimension(lam: Sequence[int]) -> int:
    l1, l2, l3 = lam
    return (l1 - l2 + 1) * (l2 - l3 + 1) * (l1 - l3 + 2) // 2


def kostant_partition(n: Sequence[int]) -> int:
    """Ways to write n as a nonnegative combination of e1-e2, e1-e3, e2-e3."""
    n1, n2, n3 = n
    if n1 + n2 + n3 != 0 or n1 < 0 or n3 > 0:
        return 0
    return min(n1, -n3) + 1


def kostant_multiplicity(lam_prime: Sequence[int], mu: Sequence[int]) -> int:
    """Multiplicity of the weight mu in the U(3)-type of highest weight lam_prime."""
    lam_prime = tuple(lam_prime)
    if not (lam_prime[0] >= lam_prime[1] >= lam_prime[2]):
        raise NotDominant(f"{lam_prime} is not dominant for U(3)")
    rho_k = (1, 0, -1)
    total = 0
    for perm in permutations(range(3)):
        sign = _perm_sign(perm)
        v = tuple(lam_prime[i] + rho_k[i] for i in range(3))
        wv = tuple(v[perm[i]] for i in range(3))
        total += sign * kostant_partition(tuple(wv[i] - rho_k[i] - mu[i] for i in range(3)))
    return total


def _perm_sign(perm) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


VARS = ("x1", "x2", "x3")


def _alternant(exps: Sequence[int], group: Sequence[Tuple[Tuple[int, ...], int]]) -> LaurentPoly:
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for M, sign in group:
        e = tuple(sum(M[i][j] * exps[j] for j in range(3)) for i in range(3))
        terms[e] = terms.get(e, 0) + sign
    return LaurentPoly(VARS, terms)


@lru_cache(maxsize=None)
def _signed_group(kind: str):
    return tuple((w.matrix, -1 if w.length % 2 else 1) for w in weyl_group(kind))


@lru_cache(maxsize=None)
def gl3_character(lam: Tuple[int, int, int]) -> LaurentPoly:
    """Weyl character of the U(3)-type lam as an alternant quotient."""
    if not (lam[0] >= lam[1] >= lam[2]):
        raise NotDominant(f"{lam} is not dominant for U(3)")
    group = tuple((w.matrix, -1 if w.length % 2 else 1) for w in weyl_group("A2compact"))
    rho = (1, 0, -1)
    num = _alternant(tuple(l + r for l, r in zip(lam, rho)), group)
    den = _alternant(rho, group)
    return num.divexact(den)


@lru_cache(maxsize=None)
def sp6_character(lam: Tuple[int, int, int]) -> LaurentPoly:
    lam = tuple(lam)
    _check_dominant_c3(lam)
    if lam[0] > max_lambda1():
        raise BoundExceeded(f"lambda_1 = {lam[0]} exceeds the bound {max_lambda1()} (set {MAX_LAMBDA1_ENV})")
    group = _signed_group("C3")
    rho = (3, 2, 1)
    num = _alternant(tuple(l + r for l, r in zip(lam, rho)), group)
    den = _alternant(rho, group)
    return num.divexact(den)


def character_multiplicity(char: LaurentPoly, mu: Sequence[int]) -> int:
    c = char.coefficient(tuple(mu))
    return int(c)


def branch_to_u3(lam: Sequence[int]) -> Dict[Tuple[int, int, int], int]:
    """U(3)-types in V^lam with multiplicities, by peeling the highest remaining weight."""
    lam = tuple(lam[:3])
    rest = sp6_character(lam)
    out: Dict[Tuple[int, int, int], int] = {}
    while rest:
        top = max(rest.terms)
        mult = rest.terms[top]
        if not (top[0] >= top[1] >= top[2]) or mult < 0:
            raise ArithmeticError(f"peeling produced a non-dominant top weight {top}")
        out[top] = out.get(top, 0) + int(mult)
        rest = rest - gl3_character(top) * mult
    return dict(sorted(out.items(), reverse=True))


def branch_to_sl2cubed(lam: Sequence[int]) -> Dict[Tuple[int, int, int], int]:
    """Multiplicities of the irreducibles Sym^a x Sym^b x Sym^c of the plane-wise SL2^3.

    A fourth coordinate c != 0 (central character on GSp6) kills every
    isotype; it is accepted for convenience.
    """
    lam = tuple(lam)
    if len(lam) == 4 and lam[3] != 0:
        return {}
    ch = sp6_character(lam[:3])
    m = ch.terms
    out = {}
    for e in m:
        if min(e) < 0:
            continue
        val = 0
        for bits in product((0, 1), repeat=3):
            shifted = tuple(e[i] + 2 * bits[i] for i in range(3))
            val += (-1) ** sum(bits) * int(m.get(shifted, 0))
        if val:
            out[e] = val
    return dict(sorted(out.items(), reverse=True))


def trivial_sl2cubed_multiplicity(lam: Sequence[int]) -> int:
    return branch_to_sl2cubed(lam).get((0, 0, 0), 0)


# ---------------------------------------------------------------------------
# discrete series packets


@dataclass(frozen=True)
class DiscreteSeriesDatum:
    hc_param: Tuple[int, ...]
    minimal_k_type: Tuple[int, ...]
    hodge_type: Optional[Tuple[int, int]]
    chamber: str

    def to_json(self):
        return {
            "hc_param": list(self.hc_param),
            "min_k_type": list(self.minimal_k_type),
            "hodge_type": list(self.hodge_type) if self.hodge_type else None,
            "chamber": self.chamber,
        }


def _intvec(v) -> Tuple[int, ...]:
    out = []
    for x in v:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"non-integral weight {v}")
        out.append(int(x))
    return tuple(out)


def minimal_k_type(rs: RootSystem, Lam: Sequence[int]) -> Tuple[int, ...]:
    """Lam + delta_G - 2 delta_K with deltas taken in the chamber of Lam."""
    pos = [a for a in rs.roots if rs.pair(a, Lam) > 0]
    if len(pos) != len(rs.positive):
        raise ValueError(f"{tuple(Lam)} is singular")
    comp = [a for a in pos if _is_root(a, rs.compact_positive)]
    n = len(rs.form)
    dG = [Fraction(sum(a[i] for a in pos), 2) for i in range(n)]
    dK = [Fraction(sum(a[i] for a in comp), 2) for i in range(n)]
    return _intvec([Lam[i] + dG[i] - 2 * dK[i] for i in range(n)])


def hodge_type(Lam: Sequence[int]) -> Tuple[int, int]:
    """(p, q): positive noncompact roots pairing positively / negatively with Lam."""
    p = sum(1 for a in C3.noncompact_positive if C3.pair(a, Lam) > 0)
    return (p, len(C3.noncompact_positive) - p)


def w8(mu: Sequence[int]) -> Tuple[int, ...]:
    return (-mu[2], -mu[1], -mu[0])


def enumerate_packet(group: str, lam: Sequence[int]) -> List[DiscreteSeriesDatum]:
    lam = tuple(lam[:3])
    _check_dominant_c3(lam)
    lr = tuple(l + r for l, r in zip(lam, (3, 2, 1)))
    data = []
    for w in coset_representatives("C3"):
        Lam = _intvec(w(lr))
        data.append(DiscreteSeriesDatum(Lam, minimal_k_type(C3, Lam), hodge_type(Lam), w.name))
    if group == "sp6":
        return data
    if group == "pgsp6":
        if sum(lam) % 2:
            raise ValueError("PGSp6 packets need lambda_1 + lambda_2 + lambda_3 even")
        out = []
        seen = set()
        for d in data:
            key = max(d.hc_param, w8(d.hc_param))
            if key in seen:
                continue
            seen.add(key)
            chosen = d if d.hc_param == key else next(e for e in data if e.hc_param == key)
            out.append(chosen)
        return out
    raise ValueError(f"unknown group {group!r}")


def hodge_types_unordered(data: Sequence[DiscreteSeriesDatum]) -> List[Tuple[int, int]]:
    return sorted((tuple(sorted(d.hodge_type, reverse=True)) for d in data), reverse=True)


G2_CHAMBER_LABELS = {(3, 1): "D3,1", (2, 4): "D2,4", (1, 5): "D1,5"}


def g2_packet(gamma: Sequence[int]) -> List[DiscreteSeriesDatum]:
    """The three discrete series with infinitesimal character gamma + rho."""
    gamma = tuple(gamma)
    if any(G2.pair(gamma, a) < 0 for a in G2.simple):
        raise NotDominant(f"{gamma} is not G2-dominant")
    gr = _intvec([g + r for g, r in zip(gamma, G2.rho)])
    out = []
    for w in coset_representatives("G2"):
        Lam = _intvec(w(gr))
        label = G2_CHAMBER_LABELS[_intvec(w(G2.rho))]
        out.append(DiscreteSeriesDatum(Lam, minimal_k_type(G2, Lam), None, label))
    return out


def quaternionic_gamma(n: int) -> Tuple[int, int]:
    """gamma with gamma + rho = (2n - 1) eps1 + eps2."""
    if n < 2:
        raise ValueError("n >= 2")
    return (2 * n - 1 - 3, 0)


def theta_arch_param(x: int, y: int) -> Dict[str, Tuple[int, ...]]:
    if (x - y) % 2:
        raise ValueError("x - y must be even")
    if not (x - 3 >= y - 1 >= 0):
        raise ValueError("need x - 3 >= y - 1 >= 0")
    hc = ((x + y) // 2, (x - y) // 2, -x)
    lam = (x - 3, (x + y - 4) // 2, (x - y - 2) // 2, 0)
    return {"hc_param": hc, "lambda": lam}
