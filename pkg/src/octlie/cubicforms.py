"""Binary cubic forms, their cubic rings, and the characters they define.

A form f = a x^3 + b x^2 y + c x y^2 + d y^3 gives the commutative ring on
{1, i, j} with

    ij = -ad,   i^2 = -ac + b i - a j,   j^2 = -bd + d i - c j.

GL2 acts by (g.f)(x, y) = det(g)^-1 f((x, y) g).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .exactmath import (
    Matrix,
    as_rational,
    kernel_basis,
    scalar_to_json,
    square_free_part,
)


@dataclass(frozen=True)
class BinaryCubic:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for k in "abcd":
            object.__setattr__(self, k, as_rational(getattr(self, k)))

    @classmethod
    def parse(cls, text: str) -> "BinaryCubic":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError("a binary cubic needs four coefficients a,b,c,d")
        return cls(*(Fraction(p) for p in parts))

    @property
    def coeffs(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __call__(self, x, y):
        return self.a * x**3 + self.b * x**2 * y + self.c * x * y**2 + self.d * y**3

    def scale(self, s) -> "BinaryCubic":
        return BinaryCubic(*(s * v for v in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> List[str]:
        return [str(scalar_to_json(v)) for v in self.coeffs]

    def __str__(self):
        terms = []
        for coef, mono in zip(self.coeffs, ("x^3", "x^2*y", "x*y^2", "y^3")):
            if coef:
                terms.append(f"{coef}*{mono}")
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# cubic rings


class AssociativityError(ArithmeticError):
    pass


Element = Tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class CubicRing:
    """Commutative Q-algebra with basis (1, i, j) and structure constants.

    ``table[(u, v)]`` is the product of basis elements u, v in {1, 2}
    (i = 1, j = 2) as a coordinate triple.
    """

    form: BinaryCubic
    table: Dict[Tuple[int, int], Element]

    def mul(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Element:
        out = [x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[0] * y[2] + x[2] * y[0]]
        for u in (1, 2):
            for v in (1, 2):
                c = x[u] * y[v]
                if c:
                    t = self.table[(u, v)]
                    for k in range(3):
                        out[k] += c * t[k]
        return tuple(out)

    @property
    def i_squared(self) -> Element:
        return self.table[(1, 1)]

    @property
    def j_squared(self) -> Element:
        return self.table[(2, 2)]

    @property
    def ij(self) -> Element:
        return self.table[(1, 2)]

    def trace(self, x: Sequence[Fraction]) -> Fraction:
        """Trace of multiplication by x."""
        cols = [self.mul(x, e) for e in _UNIT]
        return sum(cols[k][k] for k in range(3))

    def trace_form(self) -> List[List[Fraction]]:
        return [[self.trace(self.mul(u, v)) for v in _UNIT] for u in _UNIT]

    def is_associative(self) -> bool:
        for u, v, w in product(_UNIT, repeat=3):
            if self.mul(self.mul(u, v), w) != self.mul(u, self.mul(v, w)):
                return False
        return True

    def index_form(self) -> BinaryCubic:
        """Coefficients of 1 ^ xi ^ xi^2 for xi = x i + y j, as a cubic in (x, y)."""
        # Expanding the determinant: -(a, b, c, d) recovers the negated form.
        vals = {}
        for x, y in ((1, 0), (0, 1), (1, 1), (1, -1)):
            xi = (Fraction(0), Fraction(x), Fraction(y))
            sq = self.mul(xi, xi)
            vals[(x, y)] = xi[1] * sq[2] - xi[2] * sq[1]
        a = vals[(1, 0)]
        d = vals[(0, 1)]
        s = vals[(1, 1)] - a - d  # b + c
        t = vals[(1, -1)] - a + d  # c - b
        return BinaryCubic(a, (s - t) / 2, (s + t) / 2, d)


_UNIT = (
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1)),
)


def cubic_ring(f: BinaryCubic, check: bool = True) -> CubicRing:
    a, b, c, d = f.coeffs
    ij = (-a * d, Fraction(0), Fraction(0))
    table = {
        (1, 1): (-a * c, b, -a),
        (2, 2): (-b * d, d, -c),
        (1, 2): ij,
        (2, 1): ij,
    }
    R = CubicRing(f, table)
    if check and not R.is_associative():
        raise AssociativityError(f"structure constants of {f} are not associative")
    return R


def discriminant(f: BinaryCubic) -> Fraction:
    a, b, c, d = f.coeffs
    return b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d


def square_class_of_disc(f: BinaryCubic) -> Optional[int]:
    """Squarefree integer representing disc(f) mod squares; None when disc = 0."""
    disc = discriminant(f)
    if not disc:
        return None
    return square_free_part(disc)


def is_etale(f: BinaryCubic) -> bool:
    return discriminant(f) != 0


# ---------------------------------------------------------------------------
# GL2 action


def _as_2x2(g) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
    if isinstance(g, Matrix):
        g = g.to_dense(Fraction(0))
    (p, q), (r, s) = g
    return ((as_rational(p), as_rational(q)), (as_rational(r), as_rational(s)))


def det2(g) -> Fraction:
    (p, q), (r, s) = _as_2x2(g)
    return p * s - q * r


def gl2_act(g, f: BinaryCubic) -> BinaryCubic:
    """(g.f)(x, y) = det(g)^-1 f((x, y) g); g given as rows [[p, q], [r, s]]."""
    (p, q), (r, s) = _as_2x2(g)
    det = p * s - q * r
    if not det:
        raise ValueError("singular matrix")
    # (x, y) g = (p x + r y, q x + s y); expand f on these linear forms.
    X = (p, r)
    Y = (q, s)
    out = [Fraction(0)] * 4
    coeffs = f.coeffs
    for k, coef in enumerate(coeffs):
        if not coef:
            continue
        # term coef * X^(3-k) * Y^k
        poly = [coef]
        for lin in [X] * (3 - k) + [Y] * k:
            nxt = [Fraction(0)] * (len(poly) + 1)
            for e, v in enumerate(poly):
                nxt[e] += v * lin[0]
                nxt[e + 1] += v * lin[1]
            poly = nxt
        for e, v in enumerate(poly):
            out[e] += v
    return BinaryCubic(*(v / det for v in out))


def ring_isomorphism_from_gl2(f: BinaryCubic, g) -> Tuple[Element, Element]:
    """Images of i', j' (basis of R(g.f)) inside R(f).

    The new basis is i' = g11 i + g12 j + c1, j' = g21 i + g22 j + c2 with the
    constants fixed by requiring i' j' to be a scalar.
    """
    (p, q), (r, s) = _as_2x2(g)
    R = cubic_ring(f, check=False)
    w = (Fraction(0), p, q)
    t = (Fraction(0), r, s)
    wt = R.mul(w, t)
    # wt + c2 w + c1 t has zero i and j parts
    det = p * s - q * r
    # c2 p + c1 r = -wt_i ; c2 q + c1 s = -wt_j
    c2 = (-wt[1] * s + wt[2] * r) / det
    c1 = (-wt[2] * p + wt[1] * q) / det
    return (c1, p, q), (c2, r, s)


def transported_table(f: BinaryCubic, g) -> Dict[Tuple[int, int], Element]:
    """Structure constants of R(f) rewritten in the basis induced by g."""
    R = cubic_ring(f, check=False)
    u, v = ring_isomorphism_from_gl2(f, g)
    basis = [u, v]
    # change of coordinates from (1, i, j) to (1, u, v)
    M = [[Fraction(1), u[0], v[0]], [Fraction(0), u[1], v[1]], [Fraction(0), u[2], v[2]]]
    from .exactmath import invert_dense

    Minv = invert_dense(M)
    table = {}
    for a_idx in (1, 2):
        for b_idx in (1, 2):
            prod_ = R.mul(basis[a_idx - 1], basis[b_idx - 1])
            table[(a_idx, b_idx)] = tuple(sum(Minv[r][k] * prod_[k] for k in range(3)) for r in range(3))
    return table


def rational_roots(f: BinaryCubic) -> List[Tuple[Fraction, Fraction]]:
    """Rational zeros of f in P^1 as representatives (x, y), with multiplicity."""
    if f.is_zero():
        raise ValueError("zero form")
    roots: List[Tuple[Fraction, Fraction]] = []
    coeffs = list(f.coeffs)  # x^3 ... y^3; in t = x/y: a t^3 + b t^2 + c t + d
    while coeffs and not coeffs[0]:
        roots.append((Fraction(1), Fraction(0)))
        coeffs.pop(0)
    poly = coeffs  # degree len-1 in t, leading first
    for t in _rational_roots_univariate(poly):
        roots.append((t, Fraction(1)))
    return roots


def _rational_roots_univariate(poly: List[Fraction]) -> List[Fraction]:
    from math import lcm

    out: List[Fraction] = []
    poly = list(poly)
    while len(poly) > 1:
        den = lcm(*(c.denominator for c in poly))
        ints = [int(c * den) for c in poly]
        # strip zero constant terms (root t = 0)
        if ints[-1] == 0:
            out.append(Fraction(0))
            poly = poly[:-1]
            continue
        found = None
        for p in _divisors(abs(ints[-1])):
            for q in _divisors(abs(ints[0])):
                for sign in (1, -1):
                    t = Fraction(sign * p, q)
                    if _horner(poly, t) == 0:
                        found = t
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        out.append(found)
        poly = _deflate(poly, found)
    return out


def _divisors(n: int) -> List[int]:
    return [k for k in range(1, n + 1) if n % k == 0] if n else [1]


def _horner(poly: Sequence[Fraction], t: Fraction) -> Fraction:
    v = Fraction(0)
    for c in poly:
        v = v * t + c
    return v


def _deflate(poly: Sequence[Fraction], t: Fraction) -> List[Fraction]:
    out = []
    acc = Fraction(0)
    for c in poly[:-1]:
        acc = acc * t + c
        out.append(acc)
    return out


def _point_map(src: Sequence[Tuple[Fraction, Fraction]], dst: Sequence[Tuple[Fraction, Fraction]]):
    """g (up to scale) with src[k] g proportional to dst[k] for k = 0, 1, 2."""
    rows = []
    for (u1, u2), (v1, v2) in zip(src, dst):
        # (u g)_1 v2 - (u g)_2 v1 = 0, g = [[g0, g1], [g2, g3]]
        rows.append({0: u1 * v2, 2: u2 * v2, 1: -u1 * v1, 3: -u2 * v1})
    m = Matrix(3, 4)
    for r, row in enumerate(rows):
        for c, val in row.items():
            if val:
                m.entries[(r, c)] = val
    ker = kernel_basis(m)
    if len(ker) != 1:
        return None
    v = ker[0]
    g = [[v.get(0, Fraction(0)), v.get(1, Fraction(0))], [v.get(2, Fraction(0)), v.get(3, Fraction(0))]]
    if not (g[0][0] * g[1][1] - g[0][1] * g[1][0]):
        return None
    return g


def find_gl2_equivalence(f: BinaryCubic, target: BinaryCubic) -> Optional[List[List[Fraction]]]:
    """An explicit g in GL2(Q) with g.f = target, for totally split forms.

    Both forms must have three distinct rational zeros in P^1; returns None
    otherwise or when no equivalence exists.
    """
    rf, rt = rational_roots(f), rational_roots(target)
    if len(rf) != 3 or len(rt) != 3:
        return None
    for perm in permutations(rf):
        g = _point_map(rt, perm)
        if g is None:
            continue
        h = gl2_act(g, f)
        ratio = None
        ok = True
        for hv, tv in zip(h.coeffs, target.coeffs):
            if tv:
                r = hv / tv
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    ok = False
                    break
            elif hv:
                ok = False
                break
        if not ok or not ratio:
            continue
        # g -> g / ratio rescales g.f by 1/ratio
        g = [[x / ratio for x in row] for row in g]
        if gl2_act(g, f) == target:
            return g
    return None


# ---------------------------------------------------------------------------
# V_H pairing and characters


@dataclass(frozen=True)
class VHVector:
    """Coordinates (l1, l2, l3, l4) of x_a(l1) x_{a+b}(l2/3) x_{a+2b}(l3/3) x_{a+3b}(l4)."""

    l1: Fraction
    l2: Fraction
    l3: Fraction
    l4: Fraction

    def __post_init__(self):
        for k in ("l1", "l2", "l3", "l4"):
            object.__setattr__(self, k, as_rational(getattr(self, k)))

    @property
    def coords(self):
        return (self.l1, self.l2, self.l3, self.l4)

    @classmethod
    def from_form(cls, f: BinaryCubic) -> "VHVector":
        return cls(*f.coeffs)

    def to_form(self) -> BinaryCubic:
        return BinaryCubic(*self.coords)

    @classmethod
    def from_group_params(cls, mu: Sequence[object]) -> "VHVector":
        """From exponents of x_a, x_{a+b}, x_{a+2b}, x_{a+3b}."""
        m1, m2, m3, m4 = (as_rational(x) for x in mu)
        return cls(m1, 3 * m2, 3 * m3, m4)


def vh_pairing(v: VHVector, w: VHVector) -> Fraction:
    l1, l2, l3, l4 = v.coords
    m1, m2, m3, m4 = w.coords
    return l1 * m4 - l2 * m3 / 3 + l3 * m2 / 3 - l4 * m1


def form_from_functional(coeffs: Sequence[object]) -> BinaryCubic:
    """The form f with <f, n> = sum coeffs[k] mu_k for n = product of x_root(mu_k).

    ``coeffs`` are the values on x_a, x_{a+b}, x_{a+2b}, x_{a+3b} at parameter 1.
    """
    la, lab, la2b, la3b = (as_rational(x) for x in coeffs)
    # <w, n> = w1 mu4 - w2 mu3 + w3 mu2 - w4 mu1
    return BinaryCubic(la3b, -la2b, lab, -la)


@dataclass(frozen=True)
class UnipotentCharacterData:
    """A character e(sum coeffs[k] * coordinate_k) of an abelianized unipotent group."""

    group: str
    coeffs: Dict[str, Fraction]
    D: Optional[Fraction] = None

    def value(self, coords: Dict[str, object]) -> Fraction:
        return sum((c * as_rational(coords.get(k, 0)) for k, c in self.coeffs.items()), Fraction(0))

    def to_json(self):
        return {
            "group": self.group,
            "coeffs": {k: str(scalar_to_json(v)) for k, v in sorted(self.coeffs.items())},
            "D": None if self.D is None else str(scalar_to_json(self.D)),
        }


def alpha_D(D) -> List[List[Fraction]]:
    D = as_rational(D)
    return [[Fraction(0)] * 3, [Fraction(0), -D, Fraction(0)], [Fraction(0), Fraction(0), Fraction(1)]]


def trace_alpha_u(D, u: Sequence[Sequence[object]]) -> Fraction:
    """Tr(alpha_D u) for a symmetric 3x3 matrix u."""
    a = alpha_D(D)
    return sum(a[i][k] * as_rational(u[k][i]) for i in range(3) for k in range(3))


def psi_D_data(target: str, D) -> UnipotentCharacterData:
    D = as_rational(D)
    if not D:
        raise ValueError("D must be nonzero")
    coeffs = {"u22": -D, "u33": Fraction(1)}
    if target == "U3":
        return UnipotentCharacterData("U3", coeffs, D)
    if target == "UP":
        coeffs["v1"] = Fraction(1)
        return UnipotentCharacterData("UP", coeffs, D)
    raise ValueError(f"unknown target group {target!r}; expected U3 or UP")


def psi_v_data(f: BinaryCubic) -> UnipotentCharacterData:
    """psi_v(n) = e(<v, n>) as coefficients on the V_H coordinates of n."""
    v = VHVector.from_form(f)
    coeffs = {}
    for k in range(4):
        e = [Fraction(int(k == j)) for j in range(4)]
        coeffs[f"l{k + 1}"] = vh_pairing(v, VHVector(*e))
    return UnipotentCharacterData("UH", coeffs)


def psi_v_nondegenerate(f: BinaryCubic) -> bool:
    """Non-degeneracy of the character family attached to f (disc != 0)."""
    return is_etale(f)
