"""The verification suite behind ``octlie verify-all``.

Each ``criterion_N`` returns a ``SuiteResult`` holding check records
{id, anchor, status, witness}.  ``anchor`` names the mathematical statement a
check certifies.  Witness data is deterministic for fixed seeds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional

from .exactmath import scalar_to_json

DEFAULT_SEED = 20240601


@dataclass
class Check:
    id: str
    anchor: str
    ok: bool
    witness: object = None

    def to_json(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": "pass" if self.ok else "fail", "witness": self.witness}


@dataclass
class SuiteResult:
    criterion: int
    title: str
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, id: str, anchor: str, ok: bool, witness: object = None) -> bool:
        self.checks.append(Check(id, anchor, bool(ok), witness))
        return bool(ok)

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "title": self.title,
            "status": "pass" if self.ok else "fail",
            "checks": [c.to_json() for c in self.checks],
        }


def _rand_q(rng: random.Random, size: int = 9) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, 4))


# ---------------------------------------------------------------------------
# 1. octonions


def random_octonion(rng: random.Random):
    from .octonion import Octonion

    return Octonion([_rand_q(rng) for _ in range(8)])


def criterion_1(n: int = 1000, seed: int = DEFAULT_SEED) -> SuiteResult:
    from .octonion import BASIS, Octonion, conj, multiplication_table, mul, norm, trace

    res = SuiteResult(1, "split octonion axioms")
    rng = random.Random(seed)
    one = Octonion.one()
    bad = {"composition": 0, "alternative": 0, "trace": 0, "conjugation": 0}
    for _ in range(n):
        x, y = random_octonion(rng), random_octonion(rng)
        xy, yx, xx = mul(x, y), mul(y, x), mul(x, x)
        if norm(xy) != norm(x) * norm(y):
            bad["composition"] += 1
        if mul(x, xy) != mul(xx, y) or mul(yx, x) != mul(y, xx):
            bad["alternative"] += 1
        if trace(xy) != trace(yx) or x + conj(x) != one.scale(trace(x)):
            bad["trace"] += 1
        if mul(x, conj(x)) != one.scale(norm(x)) or conj(xy) != mul(conj(y), conj(x)):
            bad["conjugation"] += 1
    res.add("composition", "N(xy) = N(x) N(y)", bad["composition"] == 0, {"samples": n, "failures": bad["composition"]})
    res.add("alternativity", "x(xy) = (xx)y and (yx)x = y(xx)", bad["alternative"] == 0, {"samples": n, "failures": bad["alternative"]})
    res.add("trace", "Tr(xy) = Tr(yx), x + conj(x) = Tr(x)", bad["trace"] == 0, {"samples": n, "failures": bad["trace"]})
    res.add("conjugation", "x conj(x) = N(x), conj(xy) = conj(y) conj(x)", bad["conjugation"] == 0, {"samples": n, "failures": bad["conjugation"]})

    table = multiplication_table()
    mismatches = []
    for (r, c), entry in table.items():
        got = mul(Octonion.basis(r), Octonion.basis(c))
        if entry == "0":
            want = Octonion.zero()
        elif entry.startswith("-"):
            want = -Octonion.basis(entry[1:])
        else:
            want = Octonion.basis(entry)
        if got != want:
            mismatches.append(f"{r}*{c}")
    res.add("table", "64 basis products match the defining table", len(table) == 64 and not mismatches, {"entries": len(table), "mismatches": mismatches})
    one_ok = all(mul(one, Octonion.basis(b)) == Octonion.basis(b) == mul(Octonion.basis(b), one) for b in BASIS)
    res.add("identity", "s4 + t4 is a two-sided identity", one_ok)
    return res


# ---------------------------------------------------------------------------
# 2. g2


def g2_structure_constants(ctx=None):
    from .g2lie import bracket, build_g2

    ctx = ctx or build_g2()
    B = ctx.basis
    return [[ctx.coordinates(bracket(x, y)) for y in B] for x in B]


def jacobi_failures(table) -> List[tuple]:
    n = len(table)

    def br(u, v):
        out = [Fraction(0)] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    for k, c in enumerate(table[i][j]):
                        if c:
                            out[k] += a * b * c
        return out

    unit = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                x, y, z = unit[i], unit[j], unit[k]
                s = [a + b + c for a, b, c in zip(br(x, br(y, z)), br(y, br(z, x)), br(z, br(x, y)))]
                if any(s):
                    bad.append((i, j, k))
    return bad


def criterion_2() -> SuiteResult:
    from .g2lie import build_g2, check_rescaling_equations, commutator_matrix
    from .exactmath import kernel_basis

    res = SuiteResult(2, "g2 as the commutator kernel")
    ker = kernel_basis(commutator_matrix())
    res.add("kernel_dim", "kernel of wedge^2 V7 -> V7 has dimension 14", len(ker) == 14, {"dim": len(ker)})
    ctx = build_g2()
    try:
        table = g2_structure_constants(ctx)
        closed = True
    except ValueError:
        table, closed = None, False
    res.add("closure", "brackets of kernel elements stay in the kernel", closed)
    bad = jacobi_failures(table) if table else ["no table"]
    res.add("jacobi", "Jacobi identity on all basis triples", not bad, {"failures": len(bad)})
    res.add("roots", "Cartan of dimension 2 plus 12 one-dimensional root spaces", len(ctx.cartan) == 2 and len(ctx.roots) == 12,
            {"roots": sorted(f"{m}a+{k}b" for m, k in ctx.roots)})
    eqs = check_rescaling_equations(ctx)
    held = [n for n, ok, _ in eqs if ok]
    failed = [n for n, ok, _ in eqs if not ok]
    res.add("displayed_actions", "the 8 displayed generator actions hold after per-generator rescaling",
            not failed, {"held": len(held), "failed": failed})
    return res


# ---------------------------------------------------------------------------
# 3, 4. Albert algebra orbits and the character match


ORBIT_DS = (1, 4, 2, 3, 5, -1)
MATCH_DS = (1, 2, 3, 5)


def criterion_3(ds=ORBIT_DS) -> SuiteResult:
    from .albert import omega_membership, orbit_representatives, square_root_of, stabilizer_dimension
    from .g2lie import build_g2

    res = SuiteResult(3, "rank-one orbit representatives")
    ctx = build_g2()
    for D in ds:
        D = Fraction(D)
        reps = orbit_representatives(D)
        members = {r.name: omega_membership(r.element, D) for r in reps}
        res.add(f"omega_D={D}", "representatives satisfy the omega conditions", all(m.ok for m in members.values()),
                {n: m.diagnostic for n, m in members.items()})
        dims = [stabilizer_dimension(r.element, ctx) for r in reps]
        want = [8, 5, 5, 3] if square_root_of(D) is not None else [8, 3]
        res.add(f"stabilizers_D={D}", "stabilizer dimensions (8,5,5,3) split / (8,3) non-split", dims == want, {"dims": dims, "expected": want})
    return res


def criterion_4(ds=MATCH_DS) -> SuiteResult:
    from .albert import character_match
    from .cubicforms import BinaryCubic, gl2_act

    res = SuiteResult(4, "character match on U_H")
    for D in ds:
        m = character_match(Fraction(D))
        res.add(f"class_D={D}", "discriminant square class of the induced cubic equals the class of D",
                m["square_class"] == m["class_of_D"], {"form": m["form"].to_json(), "disc": scalar_to_json(m["discriminant"]), "class": m["square_class"]})
        if D == 1:
            g = m["g"]
            ok = g is not None and gl2_act(g, m["form"]) == BinaryCubic(0, 1, -1, 0)
            res.add("equivalence_D=1", "induced form is GL2(Q)-equivalent to x^2 y - x y^2", ok,
                    {"g": [[scalar_to_json(v) for v in row] for row in g] if g else None})
    return res


# ---------------------------------------------------------------------------
# 5. cubic rings


def random_form(rng: random.Random):
    from .cubicforms import BinaryCubic

    return BinaryCubic(*(Fraction(rng.randint(-6, 6)) for _ in range(4)))


def random_gl2(rng: random.Random):
    while True:
        g = [[Fraction(rng.randint(-4, 4)) for _ in range(2)] for _ in range(2)]
        if g[0][0] * g[1][1] - g[0][1] * g[1][0]:
            return g


def criterion_5(n_assoc: int = 500, n_disc: int = 200, seed: int = DEFAULT_SEED) -> SuiteResult:
    from .cubicforms import BinaryCubic, cubic_ring, det2, discriminant, gl2_act

    res = SuiteResult(5, "cubic rings of binary cubic forms")
    R = cubic_ring(BinaryCubic(0, 1, -1, 0))
    i, j = (0, 1, 0), (0, 0, 1)
    ok = R.mul(i, i) == i and R.mul(j, j) == j and R.mul(i, j) == (0, 0, 0)
    res.add("split_family", "x^2 y - x y^2 gives i^2 = i, j^2 = j, ij = 0", ok)
    fam_ok = True
    for D in (2, 3, 5, -1, Fraction(1, 2)):
        D = Fraction(D)
        R = cubic_ring(BinaryCubic(1, 0, -D, 0))
        fam_ok &= R.mul(i, j) == (0, 0, 0) and R.mul(i, i) == (D, 0, -1) and R.mul(j, j) == (0, 0, D)
    res.add("D_family", "x^3 - D x y^2 gives ij = 0, i^2 = D - j, j^2 = D j", fam_ok)
    rng = random.Random(seed)
    bad = sum(1 for _ in range(n_assoc) if not cubic_ring(random_form(rng), check=False).is_associative())
    res.add("associativity", "structure constants are associative", bad == 0, {"samples": n_assoc, "failures": bad})
    bad = 0
    for _ in range(n_disc):
        g, f = random_gl2(rng), random_form(rng)
        if discriminant(gl2_act(g, f)) != det2(g) ** 2 * discriminant(f):
            bad += 1
    res.add("disc_covariance", "disc(g.f) = det(g)^2 disc(f)", bad == 0, {"samples": n_disc, "failures": bad})
    return res


# ---------------------------------------------------------------------------
# 6-8. root data


V110_TYPES = {(1, 1, 0): 1, (1, 0, -1): 1, (0, -1, -1): 1}
V211_TYPES = {
    (-1, -1, -2): 1, (1, -1, -2): 1, (1, 1, 0): 1, (1, 1, -2): 1, (1, 0, -1): 1,
    (2, -1, -1): 1, (2, 1, -1): 1, (2, 1, 1): 1, (0, -1, -1): 1,
}


def criterion_6(max_l1: int = 5) -> SuiteResult:
    from .rootdata import C3, branch_to_sl2cubed, branch_to_u3, gl3_dimension, weyl_dimension

    res = SuiteResult(6, "branching to SL2^3 and U(3)")
    bad = []
    for l1 in range(max_l1 + 1):
        for l2 in range(l1 + 1):
            for l3 in range(l2 + 1):
                m = branch_to_sl2cubed((l1, l2, l3)).get((0, 0, 0), 0)
                want = l2 - l3 + 1 if l1 == l2 + l3 else 0
                if m != want:
                    bad.append([l1, l2, l3, m, want])
    res.add("trivial_multiplicity", "trivial SL2^3 multiplicity is l2 - l3 + 1 iff l1 = l2 + l3", not bad, {"failures": bad})
    for lam, want in (((1, 1, 0), V110_TYPES), ((2, 1, 1), V211_TYPES)):
        got = branch_to_u3(lam)
        mass = sum(m * gl3_dimension(t) for t, m in got.items())
        res.add(f"u3_{lam}", "U(3)-types of V^lam", got == want, {"types": [list(t) for t in got]})
        res.add(f"mass_{lam}", "U(3)-type dimensions add up to the Weyl dimension", mass == weyl_dimension(C3, lam), {"dim": mass})
    return res


def criterion_7(max_width: int = 6) -> SuiteResult:
    from .rootdata import gl3_character, kostant_multiplicity

    res = SuiteResult(7, "Kostant multiplicities")
    bad = []
    for l2 in range(5):
        for l3 in range(l2 + 1):
            lp = (l2, l3, -(l2 + l3))
            if kostant_multiplicity(lp, (0, 0, 0)) != l2 - l3 + 1:
                bad.append(list(lp))
    res.add("zero_weight", "zero weight of tau_(l2, l3, -l1) has multiplicity l2 - l3 + 1", not bad, {"failures": bad})
    bad = []
    count = 0
    for a in range(max_width + 1):
        for b in range(a + 1):
            lp = (a, b, 0)
            ch = gl3_character(lp)
            for mu, c in ch.terms.items():
                count += 1
                if kostant_multiplicity(lp, mu) != c:
                    bad.append([list(lp), list(mu)])
    res.add("character_agreement", "Kostant formula agrees with the Weyl character coefficients", not bad, {"weights": count, "failures": bad[:5]})
    return res


def criterion_8() -> SuiteResult:
    from .rootdata import enumerate_packet, hodge_types_unordered, theta_arch_param, w8

    res = SuiteResult(8, "discrete series packets")
    want_hodge = sorted([(6, 0), (5, 1), (4, 2), (3, 3)] * 2, reverse=True)
    for lam in ((0, 0, 0), (2, 1, 1), (3, 2, 1)):
        l1, l2, l3 = lam
        pk = enumerate_packet("sp6", lam)
        res.add(f"size_{lam}", "Sp6 packet has 8 members", len(pk) == 8)
        res.add(f"hodge_{lam}", "Hodge types (6,0),(5,1),(4,2),(3,3) twice each, unordered", hodge_types_unordered(pk) == want_hodge,
                {"hodge": [list(d.hodge_type) for d in pk]})
        mid = [d for d in pk if d.hodge_type == (3, 3)]
        hc = sorted(d.hc_param for d in mid)
        kt = sorted(d.minimal_k_type for d in mid)
        hc_want = sorted([(l2 + 2, l3 + 1, -l1 - 3), (l1 + 3, -l3 - 1, -l2 - 2)])
        kt_want = sorted([(l2 + 2, l3 + 2, -l1 - 4), (l1 + 4, -l3 - 2, -l2 - 2)])
        res.add(f"hodge33_{lam}", "(3,3) members: HC parameters and minimal K-types", hc == hc_want and kt == kt_want,
                {"hc": [list(h) for h in hc], "k_types": [list(k) for k in kt]})
    for n in (2, 3, 4, 5):
        t = theta_arch_param(2 * n - 1, 1)
        lam = t["lambda"]
        pk = enumerate_packet("pgsp6", lam[:3])
        present = any(d.hc_param in (t["hc_param"], w8(t["hc_param"])) and d.hodge_type in ((3, 3),) for d in pk)
        res.add(f"theta_n={n}", "theta parameter gives lambda = (2n-4, n-2, n-2, 0) and a PGSp6 (3,3) member",
                lam == (2 * n - 4, n - 2, n - 2, 0) and present, {"hc": list(t["hc_param"]), "lambda": list(lam)})
    return res


# ---------------------------------------------------------------------------
# 9. non-vanishing


NONVANISHING_LAMBDAS = ((0, 0, 0), (1, 1, 0), (2, 1, 1), (2, 2, 0), (3, 2, 1))


def criterion_9(lambdas=NONVANISHING_LAMBDAS) -> SuiteResult:
    from .repspaces import zero_weight_basis_check, nonvanishing_report

    res = SuiteResult(9, "non-vanishing of the test-vector pairing")
    for lam in lambdas:
        for mu in range(lam[2], lam[1] + 1):
            r = nonvanishing_report(lam, mu)
            res.add(f"pairing_{lam}_mu={mu}", "X0 and v^[lam,mu] project nontrivially and pair nontrivially", r.ok, r.to_json())
        res.add(f"basis_{lam}", "projections of the v^[lam,mu] are bases of the zero weight spaces", zero_weight_basis_check(lam))
    return res


# ---------------------------------------------------------------------------
# 10. L-factors


def criterion_10(n: int = 100, seed: int = DEFAULT_SEED) -> SuiteResult:
    from .lfactors import G2SatakeParam, factorization_check, roots_have_modulus, root_of_unity

    res = SuiteResult(10, "Spin = Std + 1 on the G2 torus")
    res.add("symbolic", "det(1 - X Spin) = (1 - X) det(1 - X Std) in Q[u1^+-1, u2^+-1, X]", factorization_check(G2SatakeParam.symbolic()))
    rng = random.Random(seed)
    bad = 0
    for _ in range(n):
        u1 = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        u2 = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        bad += not factorization_check(G2SatakeParam(u1, u2))
    res.add("numeric", "the identity at random rational parameters", bad == 0, {"samples": n, "failures": bad})
    mod_ok = True
    for ell in (2, 3, 5):
        for k1, k2 in product(range(4), repeat=2):
            mod_ok &= roots_have_modulus(ell, G2SatakeParam(root_of_unity(4, k1), root_of_unity(4, k2)))
    res.add("hecke_modulus", "Hecke roots have modulus ell^3 at unitary parameters", mod_ok)
    return res


CRITERIA: Dict[int, Callable[[], SuiteResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run_all(only: Optional[List[int]] = None) -> List[SuiteResult]:
    return [CRITERIA[k]() for k in sorted(CRITERIA) if only is None or k in only]
