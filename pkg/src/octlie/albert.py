"""Albert algebra elements, rank, the rank-one set with fixed Siegel character, and U0.

An element is the Hermitian octonion matrix

    [[d,    z*, y ],
     [z,    e,  x*],
     [y*,   x,  f ]]

(* is octonion conjugation).  A(x, y, z) denotes the element with
d = 0, e = -D, f = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cubicforms import BinaryCubic, find_gl2_equivalence, form_from_functional
from .exactmath import (
    LaurentPoly,
    as_rational,
    rational_sqrt,
    scalar_to_json,
)
from .g2lie import (
    G2Context,
    NilpotentGroupElement,
    VH_ROOTS,
    build_g2,
    stabilizer_subalgebra,
    x_root,
)
from .octonion import Octonion, conj, mul, norm, trace

Y0 = Octonion.basis("s4") - Octonion.basis("t4")


def _o(name: str, c=Fraction(1)) -> Octonion:
    return Octonion.basis(name, c)


def _zero_like(D):
    return LaurentPoly(D.variables) if isinstance(D, LaurentPoly) else Fraction(0)


@dataclass(frozen=True)
class AlbertElement:
    d: object
    e: object
    f: object
    x: Octonion
    y: Octonion
    z: Octonion

    # -- matrix view -------------------------------------------------------
    def matrix(self) -> List[List[Octonion]]:
        one = Octonion.one()
        return [
            [one.scale(self.d), conj(self.z), self.y],
            [self.z, one.scale(self.e), conj(self.x)],
            [conj(self.y), self.x, one.scale(self.f)],
        ]

    @classmethod
    def from_matrix(cls, M: Sequence[Sequence[Octonion]]) -> "AlbertElement":
        return cls(
            M[0][0].coords[6],
            M[1][1].coords[6],
            M[2][2].coords[6],
            M[2][1],
            M[0][2],
            M[1][0],
        )

    def __add__(self, o: "AlbertElement") -> "AlbertElement":
        return AlbertElement(self.d + o.d, self.e + o.e, self.f + o.f, self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "AlbertElement") -> "AlbertElement":
        return AlbertElement(self.d - o.d, self.e - o.e, self.f - o.f, self.x - o.x, self.y - o.y, self.z - o.z)

    def scale(self, s) -> "AlbertElement":
        return AlbertElement(s * self.d, s * self.e, s * self.f, self.x.scale(s), self.y.scale(s), self.z.scale(s))

    def is_zero(self) -> bool:
        return not (self.d or self.e or self.f or self.x or self.y or self.z)

    def trace(self):
        return self.d + self.e + self.f

    def square(self) -> "AlbertElement":
        M = self.matrix()
        P = [[_row_col(M, M, i, j) for j in range(3)] for i in range(3)]
        return AlbertElement.from_matrix(P)

    def to_json(self):
        return {
            "d": str(scalar_to_json(self.d)),
            "e": str(scalar_to_json(self.e)),
            "f": str(scalar_to_json(self.f)),
            "x": self.x.to_json(),
            "y": self.y.to_json(),
            "z": self.z.to_json(),
        }

    def map_offdiagonal(self, fn) -> "AlbertElement":
        """Apply fn to x, y, z (an automorphism of O commutes with conjugation)."""
        return AlbertElement(self.d, self.e, self.f, fn(self.x), fn(self.y), fn(self.z))


def _row_col(M, N, i, j) -> Octonion:
    acc = mul(M[i][0], N[0][j])
    for k in (1, 2):
        acc = acc + mul(M[i][k], N[k][j])
    return acc


def identity() -> AlbertElement:
    z = Octonion.zero()
    return AlbertElement(Fraction(1), Fraction(1), Fraction(1), z, z, z)


def albert_det(A: AlbertElement):
    """def - d N(x) - e N(y) - f N(z) + Tr(xyz)."""
    return (
        A.d * A.e * A.f
        - A.d * norm(A.x)
        - A.e * norm(A.y)
        - A.f * norm(A.z)
        + trace(mul(mul(A.x, A.y), A.z))
    )


def adjoint(A: AlbertElement) -> AlbertElement:
    """A# = A^2 - Tr(A) A + sigma(A) 1 with sigma = (Tr(A)^2 - Tr(A^2)) / 2."""
    sq = A.square()
    t = A.trace()
    sigma = (t * t - sq.trace()) / 2
    return sq - A.scale(t) + identity().scale(sigma)


def rank(A: AlbertElement) -> int:
    if A.is_zero():
        return 0
    if adjoint(A).is_zero():
        return 1
    if albert_det(A):
        return 3
    return 2


def is_rank_one_by_square(A: AlbertElement) -> bool:
    """A != 0 and A^2 = Tr(A) A."""
    return not A.is_zero() and (A.square() - A.scale(A.trace())).is_zero()


def rank_one_entry_equations(A: AlbertElement) -> Dict[str, bool]:
    """The six entrywise rank-one conditions."""
    d, e, f, x, y, z = A.d, A.e, A.f, A.x, A.y, A.z
    return {
        "N(x)=ef": not (norm(x) - e * f),
        "N(y)=df": not (norm(y) - d * f),
        "N(z)=de": not (norm(z) - d * e),
        "dx=conj(y)conj(z)": x.scale(d) == mul(conj(y), conj(z)),
        "ey=conj(z)conj(x)": y.scale(e) == mul(conj(z), conj(x)),
        "fz=conj(x)conj(y)": z.scale(f) == mul(conj(x), conj(y)),
    }


# ---------------------------------------------------------------------------
# omega


def A_xyz(x: Octonion, y: Octonion, z: Octonion, D) -> AlbertElement:
    one = Fraction(1)
    if isinstance(D, LaurentPoly):
        one = LaurentPoly.const(D.variables, 1)
    return AlbertElement(_zero_like(D), -D, one, x, y, z)


def y_from(x: Octonion, z: Octonion, D) -> Octonion:
    """y = -D^-1 z x."""
    inv = 1 / D if isinstance(D, LaurentPoly) else 1 / as_rational(D)
    return mul(z, x).scale(-inv)


def A_xz(x: Octonion, z: Octonion, D) -> AlbertElement:
    return A_xyz(x, y_from(x, z, D), z, D)


@dataclass(frozen=True)
class OmegaCheck:
    ok: bool
    diagnostic: str

    def __bool__(self):
        return self.ok


def omega_membership(A: AlbertElement, D) -> OmegaCheck:
    """Check the defining conditions of omega for parameter D, in a fixed order."""
    if not D:
        raise ValueError("D must be nonzero")
    checks = [
        ("d = 0", lambda: not A.d),
        ("e = -D", lambda: not (A.e + D)),
        ("f = 1", lambda: not (A.f - 1)),
        ("Tr(x) = 0", lambda: not trace(A.x)),
        ("Tr(z) = 0", lambda: not trace(A.z)),
        ("N(x) = -D", lambda: not (norm(A.x) + D)),
        ("N(z) = 0", lambda: not norm(A.z)),
        ("z not orthogonal to x", lambda: not trace(mul(A.z, conj(A.x)))),
        ("y ≠ -D^-1 z x", lambda: A.y == y_from(A.x, A.z, D)),
    ]
    for name, fn in checks:
        if not fn():
            if name == "z not orthogonal to x" or name.startswith("y"):
                return OmegaCheck(False, name)
            return OmegaCheck(False, f"{name} fails")
    return OmegaCheck(True, "ok")


def siegel_character_matches(A: AlbertElement, D) -> bool:
    """The restriction of psi_A to the Siegel unipotent U3 equals psi_D.

    Equivalent to d = 0, e = -D, f = 1 and x, y, z of trace zero."""
    return (
        not A.d
        and not (A.e + D)
        and not (A.f - 1)
        and not trace(A.x)
        and not trace(A.y)
        and not trace(A.z)
    )


# ---------------------------------------------------------------------------
# orbit representatives


def square_root_of(D) -> Optional[Fraction]:
    """Positive rational square root of D, or None (symbolic D is treated as non-square)."""
    if isinstance(D, LaurentPoly):
        if D.is_constant():
            D = D.constant_value()
        else:
            return None
    r = rational_sqrt(as_rational(D))
    if r is None:
        return None
    return abs(r)


@dataclass(frozen=True)
class OrbitRepresentative:
    name: str
    element: AlbertElement
    stabilizer: str
    expected_stabilizer_dim: int


def orbit_representatives(D) -> List[OrbitRepresentative]:
    if not D:
        raise ValueError("D must be nonzero")
    d = square_root_of(D)
    if d is not None:
        Dq = as_rational(D.constant_value() if isinstance(D, LaurentPoly) else D)
        x = Y0.scale(d)
        return [
            OrbitRepresentative("A3", A_xz(x, Octonion.zero(), Dq), "SL3", 8),
            OrbitRepresentative("A2", A_xz(x, _o("t3"), Dq), "SL2 V", 5),
            OrbitRepresentative("A1", A_xz(x, _o("s3"), Dq), "SL2 Vbar", 5),
            OrbitRepresentative("A0", A_xz(x, _o("s1") + _o("t3"), Dq), "U_D", 3),
        ]
    x = _o("s2") + _o("t2", D)
    return [
        OrbitRepresentative("A1", A_xz(x, Octonion.zero(), D), "SU_D(2,1)", 8),
        OrbitRepresentative("A0", A_xyz(x, _o("s1"), _o("t3"), D), "U_D", 3),
    ]


def open_orbit_representative(D) -> AlbertElement:
    """Representative of the open orbit used for the U_H -> U0 comparison."""
    d = square_root_of(D)
    if d is not None:
        Dq = as_rational(D)
        return A_xyz(Y0.scale(d), _o("s1") - _o("t3"), (_o("s1") + _o("t3")).scale(d), Dq)
    return orbit_representatives(D)[1].element


def stabilizer_dimension(A: AlbertElement, ctx: Optional[G2Context] = None) -> int:
    ctx = ctx or build_g2()
    vecs = [v for v in (A.x, A.y, A.z) if v]
    return len(stabilizer_subalgebra(ctx, vecs))


def stabilizer_basis(A: AlbertElement, ctx: Optional[G2Context] = None):
    ctx = ctx or build_g2()
    vecs = [v for v in (A.x, A.y, A.z) if v]
    return stabilizer_subalgebra(ctx, vecs)


def stabilizer_unipotent_type(A: AlbertElement, ctx: Optional[G2Context] = None) -> List[str]:
    """Names of the root vectors of sl3 (E_ij) that kill A."""
    ctx = ctx or build_g2()
    out = []
    for name in ("E12", "E13", "E23", "E21", "E31", "E32"):
        X = ctx.named[name]
        from .g2lie import act

        if all(not act(X, v) for v in (A.x, A.y, A.z) if v):
            out.append(name)
    return out


def g2_act(g: NilpotentGroupElement, A: AlbertElement) -> AlbertElement:
    return A.map_offdiagonal(g.apply)


# ---------------------------------------------------------------------------
# U0 and the GL3 action


@dataclass(frozen=True)
class U0Element:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        for k in ("a", "b"):
            v = getattr(self, k)
            if not isinstance(v, LaurentPoly):
                object.__setattr__(self, k, as_rational(v))

    def matrix(self):
        return [[Fraction(1), self.a, self.b], [Fraction(0), Fraction(1), Fraction(0)], [Fraction(0), Fraction(0), Fraction(1)]]

    def __mul__(self, o: "U0Element") -> "U0Element":
        return U0Element(self.a + o.a, self.b + o.b)

    def is_identity(self) -> bool:
        return not self.a and not self.b

    def to_json(self):
        return {"a": str(scalar_to_json(self.a)), "b": str(scalar_to_json(self.b))}


def _inv3(g):
    from .exactmath import invert_dense

    return invert_dense([list(r) for r in g])


def gl3_act(g, A: AlbertElement) -> AlbertElement:
    """g.A = det(g) (g^t)^-1 A g^-1 for a rational 3x3 matrix g."""
    from .exactmath import det_dense

    det = det_dense(g)
    if not det:
        raise ValueError("singular matrix")
    gi = _inv3(g)
    git = [[gi[j][i] for j in range(3)] for i in range(3)]
    M = A.matrix()
    zero = Octonion.zero()
    left = [[sum((M[k][j].scale(git[i][k]) for k in range(3) if git[i][k]), zero) for j in range(3)] for i in range(3)]
    out = [[sum((left[i][k].scale(gi[k][j]) for k in range(3) if gi[k][j]), zero) for j in range(3)] for i in range(3)]
    out = [[o.scale(det) for o in row] for row in out]
    return AlbertElement.from_matrix(out)


def u0_act(u: U0Element, A: AlbertElement) -> AlbertElement:
    """u.A via the GL3 formula with g = [[1, a, b], [0, 1, 0], [0, 0, 1]]."""
    return gl3_act(u.matrix(), A)


def u0_act_on_triple(u: U0Element, A: AlbertElement) -> AlbertElement:
    """The closed form (x, y, z) -> (x + a y + b z, y, z)."""
    return AlbertElement(A.d, A.e, A.f, A.x + A.y.scale(u.a) + A.z.scale(u.b), A.y, A.z)


class NotInHeisenbergError(ValueError):
    pass


_UH_NAMES = {"a", "a+b", "a+2b", "a+3b", "2a+3b"}


def heisenberg_to_u0(u: NilpotentGroupElement, D) -> U0Element:
    """(a, b) with u.(x, y, z) = (x + a y + b z, y, z) on the open representative."""
    for label, _ in u.word:
        if label not in _UH_NAMES:
            raise NotInHeisenbergError(f"x_{label} is not in U_H")
    A = open_orbit_representative(D)
    ux, uy, uz = u.apply(A.x), u.apply(A.y), u.apply(A.z)
    if uy != A.y or uz != A.z:
        raise ArithmeticError("u does not fix y and z on the open representative")
    delta = ux - A.x
    a, b = _solve_two(A.y, A.z, delta)
    return U0Element(a, b)


def _solve_two(y: Octonion, z: Octonion, target: Octonion):
    """Exact (a, b) with a y + b z = target."""
    ys, zs, ts = y.coords, z.coords, target.coords
    for i in range(8):
        for j in range(i + 1, 8):
            det = ys[i] * zs[j] - ys[j] * zs[i]
            if det:
                a = (ts[i] * zs[j] - ts[j] * zs[i]) / det
                b = (ys[i] * ts[j] - ys[j] * ts[i]) / det
                if y.scale(a) + z.scale(b) != target:
                    raise ArithmeticError("u.x - x is not in span(y, z)")
                return a, b
    raise ArithmeticError("y and z are linearly dependent")


def induced_functional(D, ctx: Optional[G2Context] = None) -> Dict[Tuple[int, int], Fraction]:
    """Value of psi0 o p (the a-coordinate) on x_alpha(1) for alpha in V_H."""
    ctx = ctx or build_g2()
    return {lab: heisenberg_to_u0(x_root(ctx, lab, Fraction(1)), D).a for lab in VH_ROOTS}


def induced_binary_cubic(D, ctx: Optional[G2Context] = None) -> BinaryCubic:
    if not D:
        raise ValueError("D must be nonzero")
    ell = induced_functional(D, ctx)
    return form_from_functional([ell[lab] for lab in VH_ROOTS])


def character_match(D, ctx: Optional[G2Context] = None) -> Dict[str, object]:
    """Induced form, its discriminant class, and an explicit equivalence when D is a square."""
    from .cubicforms import discriminant, square_class_of_disc
    from .exactmath import square_free_part

    ctx = ctx or build_g2()
    f = induced_binary_cubic(D, ctx)
    out: Dict[str, object] = {
        "form": f,
        "discriminant": discriminant(f),
        "square_class": square_class_of_disc(f),
        "class_of_D": square_free_part(as_rational(D)),
    }
    if square_root_of(D) is not None:
        out["target"] = BinaryCubic(0, 1, -1, 0)
        out["g"] = find_gl2_equivalence(f, out["target"])
    else:
        Dq = as_rational(D)
        out["target"] = BinaryCubic(0, Dq, 0, -1)
        out["g"] = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]] if f == out["target"] else None
    return out


def symbolic_character_match(D, ctx: Optional[G2Context] = None) -> Dict[str, object]:
    """Induced cubic coefficients (a, b, c, d) and discriminant as Laurent polynomials in D."""
    ctx = ctx or build_g2()
    ell = induced_functional(D, ctx)
    la, lab, la2b, la3b = (ell[lab_] for lab_ in VH_ROOTS)
    a, b, c, d = la3b, -la2b, lab, -la
    disc = b * b * c * c - a * c * c * c * 4 - b * b * b * d * 4 - a * a * d * d * 27 + a * b * c * d * 18
    target = (0, D, 0, -1)
    return {"coeffs": (a, b, c, d), "discriminant": disc, "target": target,
            "matches_target": all(not (x - y) for x, y in zip((a, b, c, d), target))}
