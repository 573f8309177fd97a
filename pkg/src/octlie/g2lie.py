"""The Lie algebra g2 inside the second exterior power of trace-zero octonions.

g2 is the kernel of the commutator map  x ^ y -> (xy - yx)/2  from the wedge
square of V7 to V7.  A wedge w ^ x acts on V7 by

    (w ^ x) . v = <x, v> w - <w, v> x,      <x, y> = -1/2 Tr(x y).

The named generators follow the usual sl3 + Std3 + Std3* description:
E_ij = t_j ^ s_i, v_i = y0 ^ s_i - t_{i+1} ^ t_{i+2} and
delta_i = y0 ^ t_i - s_{i+1} ^ s_{i+2}, with y0 = s4 - t4.  The minus signs
are forced by the multiplication table: with plus signs the vectors leave the
commutator kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exactmath import LaurentPoly, Matrix, kernel_basis, rank, solve_linear
from .octonion import (
    V7_BASIS_NAMES,
    Octonion,
    from_v7,
    mul,
    to_v7,
    trace,
    v7_basis,
)

PAIRING_SCALE = Fraction(-1, 2)

WEDGE_BASIS: Tuple[Tuple[int, int], ...] = tuple(combinations(range(7), 2))
WEDGE_INDEX = {p: k for k, p in enumerate(WEDGE_BASIS)}

# Scalars applied to the stated generators so that the displayed action values
# along the non-square open orbit hold verbatim (see RESCALING_EQUATIONS).
GENERATOR_SCALE: Dict[str, Fraction] = {
    "E12": Fraction(2),
    "E13": Fraction(1),
    "E23": Fraction(-2),
    "v1": Fraction(-2),
    "delta3": Fraction(-2),
}

# Root label (m, n) means m*a + n*b; a long, b short.
HEISENBERG_ROOTS = {
    (1, 0): "E12",
    (1, 1): "v1",
    (1, 2): "delta3",
    (1, 3): "E23",
    (2, 3): "E13",
}
VH_ROOTS = ((1, 0), (1, 1), (1, 2), (1, 3))


def root_name(label: Tuple[int, int]) -> str:
    """'a', 'a+b', '2a+3b', '-a-b', ... for a root label (m, n)."""
    txt = ""
    for k, s in zip(label, "ab"):
        if k == 0:
            continue
        coef = "" if abs(k) == 1 else str(abs(k))
        sign = "-" if k < 0 else ("+" if txt else "")
        txt += f"{sign}{coef}{s}"
    return txt or "0"


def _pair(x: Octonion, y: Octonion):
    return PAIRING_SCALE * trace(mul(x, y))


@lru_cache(maxsize=None)
def _basis_products():
    V = v7_basis()
    pair = [[_pair(a, b) for b in V] for a in V]
    comm = {}
    for (i, j) in WEDGE_BASIS:
        c = mul(V[i], V[j]) - mul(V[j], V[i])
        comm[(i, j)] = [x / 2 for x in to_v7(c)]
    return V, pair, comm


def wedge_action_matrix(wedge: Sequence[object]) -> Matrix:
    """7x7 matrix of the action of a wedge-coordinate vector on V7."""
    _, pair, _ = _basis_products()
    ent: Dict[Tuple[int, int], object] = {}
    for k, c in enumerate(wedge):
        if not c:
            continue
        i, j = WEDGE_BASIS[k]
        # (e_i ^ e_j) . e_m = <e_j, e_m> e_i - <e_i, e_m> e_j
        for m in range(7):
            a = pair[j][m]
            if a:
                ent[(i, m)] = ent.get((i, m), 0) + c * a
            b = pair[i][m]
            if b:
                ent[(j, m)] = ent.get((j, m), 0) - c * b
    return Matrix(7, 7, ent)


def commutator_matrix() -> Matrix:
    """Matrix of x ^ y -> (xy - yx)/2 in the wedge and V7 bases."""
    _, _, comm = _basis_products()
    ent = {}
    for k, p in enumerate(WEDGE_BASIS):
        for i, v in enumerate(comm[p]):
            if v:
                ent[(i, k)] = v
    return Matrix(7, len(WEDGE_BASIS), ent)


def wedge_of(pairs: Sequence[Tuple[object, Octonion, Octonion]]) -> Tuple[object, ...]:
    """Wedge coordinates of sum coeff * (u ^ w) for trace-zero octonions u, w."""
    out = [Fraction(0)] * len(WEDGE_BASIS)
    for coeff, u, w in pairs:
        cu, cw = to_v7(u), to_v7(w)
        for i, a in enumerate(cu):
            if not a:
                continue
            for j, b in enumerate(cw):
                if not b or i == j:
                    continue
                if i < j:
                    out[WEDGE_INDEX[(i, j)]] += coeff * a * b
                else:
                    out[WEDGE_INDEX[(j, i)]] -= coeff * a * b
    return tuple(out)


@dataclass(frozen=True)
class G2Element:
    """An element of g2 as wedge coordinates, with its 7x7 action matrix."""

    wedge: Tuple[object, ...]
    action: Matrix = field(compare=False, repr=False)

    @classmethod
    def from_wedge(cls, wedge: Sequence[object]) -> "G2Element":
        wedge = tuple(wedge)
        return cls(wedge, wedge_action_matrix(wedge))

    def __add__(self, o: "G2Element") -> "G2Element":
        return G2Element.from_wedge([a + b for a, b in zip(self.wedge, o.wedge)])

    def __sub__(self, o: "G2Element") -> "G2Element":
        return G2Element.from_wedge([a - b for a, b in zip(self.wedge, o.wedge)])

    def scale(self, s) -> "G2Element":
        return G2Element.from_wedge([s * a for a in self.wedge])

    def __rmul__(self, s) -> "G2Element":
        return self.scale(s)

    def is_zero(self) -> bool:
        return not any(self.wedge)

    def to_json(self):
        from .exactmath import scalar_to_json

        return [scalar_to_json(c) for c in self.wedge]


def act(X: G2Element, v):
    """Action of X on a trace-zero octonion (or a V7 coordinate list)."""
    if isinstance(v, Octonion):
        coords = to_v7(v)
        return from_v7(_apply(X.action, coords))
    return _apply(X.action, list(v))


def act_octonion(X: G2Element, o: Octonion) -> Octonion:
    """Action on all of O, killing the identity."""
    half = trace(o) / 2
    zero_part = o - Octonion.one().scale(half)
    return act(X, zero_part)


def _apply(m: Matrix, coords: Sequence[object]) -> List[object]:
    out: List[object] = [Fraction(0)] * m.rows
    for (i, j), a in m.entries.items():
        c = coords[j]
        if c:
            out[i] = out[i] + a * c
    return out


def bracket(X: G2Element, Y: G2Element) -> G2Element:
    """[X, Y] computed from the action matrices and read back into wedges."""
    M = X.action @ Y.action - Y.action @ X.action
    return element_from_action(M)


def element_from_action(M: Matrix) -> G2Element:
    """Wedge coordinates of a 7x7 skew action matrix (the map is injective)."""
    sys_ent = {}
    cols = [wedge_action_matrix([Fraction(int(k == c)) for k in range(21)]) for c in range(21)]
    for c, A in enumerate(cols):
        for (i, j), v in A.entries.items():
            sys_ent[(7 * i + j, c)] = v
    A = Matrix(49, 21, sys_ent)
    b = {7 * i + j: v for (i, j), v in M.entries.items()}
    sol = solve_linear(A, b)
    if sol is None:
        raise ValueError("matrix is not the action of a wedge")
    return G2Element.from_wedge([sol.get(k, Fraction(0)) for k in range(21)])


@dataclass(frozen=True)
class G2Context:
    """Result of build_g2: kernel basis, named generators, Cartan and roots."""

    kernel: Tuple[Tuple[object, ...], ...]
    named: Dict[str, G2Element]
    basis_names: Tuple[str, ...]
    cartan: Tuple[G2Element, G2Element]
    roots: Dict[Tuple[int, int], str]

    @property
    def basis(self) -> List[G2Element]:
        return [self.named[n] for n in self.basis_names]

    def root_vector(self, label: Tuple[int, int], normalized: bool = True) -> G2Element:
        name = self.roots[label]
        X = self.named[name]
        if normalized and name in GENERATOR_SCALE:
            X = X.scale(GENERATOR_SCALE[name])
        return X

    def coordinates(self, X: G2Element) -> List[object]:
        """Coordinates of X in the named basis."""
        m = Matrix.from_columns([_dense_vec(b.wedge) for b in self.basis], 21)
        sol = solve_linear(m, _dense_vec(X.wedge))
        if sol is None:
            raise ValueError("element is not in g2")
        return [sol.get(k, Fraction(0)) for k in range(len(self.basis_names))]


def _dense_vec(xs):
    return {i: x for i, x in enumerate(xs) if x}


def _named_generators() -> Dict[str, G2Element]:
    V = {n: o for n, o in zip(V7_BASIS_NAMES, v7_basis())}
    s = {i: V[f"s{i}"] for i in (1, 2, 3)}
    t = {i: V[f"t{i}"] for i in (1, 2, 3)}
    y0 = V["y0"]
    nxt = lambda i, k: (i - 1 + k) % 3 + 1
    out: Dict[str, G2Element] = {}
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i != j:
                out[f"E{i}{j}"] = G2Element.from_wedge(wedge_of([(1, t[j], s[i])]))
    for i in (1, 2, 3):
        out[f"v{i}"] = G2Element.from_wedge(wedge_of([(1, y0, s[i]), (-1, t[nxt(i, 1)], t[nxt(i, 2)])]))
        out[f"delta{i}"] = G2Element.from_wedge(wedge_of([(1, y0, t[i]), (-1, s[nxt(i, 1)], s[nxt(i, 2)])]))
    out["H1"] = G2Element.from_wedge(wedge_of([(1, t[1], s[1]), (-1, t[2], s[2])]))
    out["H2"] = G2Element.from_wedge(wedge_of([(1, t[2], s[2]), (-1, t[3], s[3])]))
    return out


class G2BuildError(RuntimeError):
    pass


@lru_cache(maxsize=1)
def build_g2() -> G2Context:
    """Construct g2 as a kernel, identify the Cartan and all 12 root spaces."""
    C = commutator_matrix()
    ker = kernel_basis(C)
    if len(ker) != 14:
        raise G2BuildError(f"kernel of the commutator map has dimension {len(ker)}, expected 14")
    named = _named_generators()
    for n, X in named.items():
        if any(C.apply(_dense_vec(X.wedge)).values()):
            raise G2BuildError(f"generator {n} is not in the kernel")
    names = ("H1", "H2", "E12", "E13", "E23", "E21", "E31", "E32",
             "v1", "v2", "v3", "delta1", "delta2", "delta3")
    if rank([_dense_vec(named[n].wedge) for n in names]) != 14:
        raise G2BuildError("named generators do not span the kernel")
    H = (named["H1"], named["H2"])
    # a = eps1 - eps2, b = eps2 evaluated on H1, H2 (eigenvalues on s1, s2, s3)
    a_val = (Fraction(1), Fraction(-1, 2))
    b_val = (Fraction(-1, 2), Fraction(1, 2))
    roots: Dict[Tuple[int, int], str] = {}
    for n in names[2:]:
        X = named[n]
        vals = []
        for h in H:
            B = bracket(h, X)
            ratio = _proportionality(B.wedge, X.wedge)
            if ratio is None:
                raise G2BuildError(f"{n} is not a root vector")
            vals.append(ratio)
        det = a_val[0] * b_val[1] - a_val[1] * b_val[0]
        m = (vals[0] * b_val[1] - vals[1] * b_val[0]) / det
        k = (a_val[0] * vals[1] - a_val[1] * vals[0]) / det
        if m.denominator != 1 or k.denominator != 1:
            raise G2BuildError(f"non-integral root for {n}")
        roots[(int(m), int(k))] = n
    if len(roots) != 12:
        raise G2BuildError("root spaces are not distinct")
    ker_t = tuple(tuple(v.get(i, Fraction(0)) for i in range(21)) for v in ker)
    return G2Context(ker_t, named, names, H, roots)


def _proportionality(u: Sequence[object], v: Sequence[object]) -> Optional[Fraction]:
    r = None
    for a, b in zip(u, v):
        if b:
            q = a / b
            if r is None:
                r = q
            elif q != r:
                return None
        elif a:
            return None
    return r if r is not None else Fraction(0)


def root_of(ctx: G2Context, X: G2Element) -> Optional[Tuple[int, int]]:
    for label, n in ctx.roots.items():
        if _proportionality(X.wedge, ctx.named[n].wedge) not in (None, 0):
            return label
    return None


def heisenberg_nilradical(ctx: G2Context) -> List[G2Element]:
    """Normalized root vectors spanning u_H: roots a, a+b, a+2b, a+3b, 2a+3b."""
    return [ctx.root_vector(lab) for lab in ((1, 0), (1, 1), (1, 2), (1, 3), (2, 3))]


# ---------------------------------------------------------------------------
# unipotent group elements


def _dense_mat(m: Matrix) -> List[List[object]]:
    return m.to_dense(Fraction(0))


def _mm(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n) if A[i][k] and B[k][j]), Fraction(0)) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class NilpotentGroupElement:
    """exp of a nilpotent element of g2 acting on V7, with its defining word."""

    matrix: Tuple[Tuple[object, ...], ...]
    word: Tuple[Tuple[str, object], ...] = ()

    def apply_v7(self, coords: Sequence[object]) -> List[object]:
        return [sum((a * c for a, c in zip(row, coords) if a and c), Fraction(0)) for row in self.matrix]

    def apply(self, o: Octonion) -> Octonion:
        """Act on O, fixing the identity."""
        half = trace(o) / 2
        one = Octonion.one()
        zero_part = o - one.scale(half)
        return from_v7(self.apply_v7(to_v7(zero_part))) + one.scale(half)

    def __matmul__(self, other: "NilpotentGroupElement") -> "NilpotentGroupElement":
        m = _mm([list(r) for r in self.matrix], [list(r) for r in other.matrix])
        return NilpotentGroupElement(tuple(tuple(r) for r in m), self.word + other.word)

    def is_unipotent(self) -> bool:
        n = len(self.matrix)
        N = [[self.matrix[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
        P = N
        for _ in range(n):
            P = _mm(P, N)
        return not any(x for r in P for x in r)


def identity_element() -> NilpotentGroupElement:
    return NilpotentGroupElement(tuple(tuple(Fraction(int(i == j)) for j in range(7)) for i in range(7)))


class NotNilpotentError(ValueError):
    pass


def exp_nilpotent(X: G2Element, t=Fraction(1), label: str = "") -> NilpotentGroupElement:
    """exp(tX) by the terminating power series; t may be a LaurentPoly."""
    N = _dense_mat(X.action)
    n = 7
    power = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    total = [row[:] for row in power]
    k = 0
    coeff = Fraction(1)
    tpow = Fraction(1)
    while True:
        k += 1
        power = _mm(power, N)
        if not any(x for r in power for x in r):
            break
        if k >= n:
            raise NotNilpotentError("element is not nilpotent")
        coeff = coeff / k
        tpow = tpow * t
        for i in range(n):
            for j in range(n):
                if power[i][j]:
                    total[i][j] = total[i][j] + tpow * coeff * power[i][j]
    return NilpotentGroupElement(tuple(tuple(r) for r in total), ((label, t),) if label else ())


def x_root(ctx: G2Context, label: Tuple[int, int], lam) -> NilpotentGroupElement:
    """One-parameter subgroup x_alpha(lam) for the normalized root vector."""
    return exp_nilpotent(ctx.root_vector(label), lam, root_name(label))


def heisenberg_word(ctx: G2Context, params: Mapping[Tuple[int, int], object]) -> NilpotentGroupElement:
    """Product x_a(l1) x_{a+b}(l2) x_{a+2b}(l3) x_{a+3b}(l4) x_{2a+3b}(l5) (missing = 0)."""
    g = identity_element()
    for lab in ((1, 0), (1, 1), (1, 2), (1, 3), (2, 3)):
        lam = params.get(lab, 0)
        if lam:
            g = g @ x_root(ctx, lab, lam)
    return g


# ---------------------------------------------------------------------------
# stabilizers


def stabilizer_subalgebra(ctx: G2Context, vectors: Sequence[Sequence[object] | Octonion]) -> List[Dict[int, object]]:
    """Basis of {X in g2 : X.v = 0 for all v}, as coordinate dicts in ctx.basis.

    Vectors may have LaurentPoly coordinates (symbolic parameters); the kernel
    is then computed over the fraction field.
    """
    rows: List[Dict[int, object]] = []
    basis = ctx.basis
    for v in vectors:
        coords = to_v7(v) if isinstance(v, Octonion) else list(v)
        images = [_apply(X.action, coords) for X in basis]
        for i in range(7):
            row = {k: images[k][i] for k in range(len(basis)) if images[k][i]}
            if row:
                rows.append(row)
    m = Matrix(len(rows), len(basis))
    for r, row in enumerate(rows):
        for c, v in row.items():
            m.entries[(r, c)] = v
    return kernel_basis(m)


def element_from_coordinates(ctx: G2Context, coords: Mapping[int, object]) -> G2Element:
    w = [Fraction(0)] * 21
    for k, c in coords.items():
        for i, a in enumerate(ctx.basis[k].wedge):
            if a:
                w[i] = w[i] + c * a
    return G2Element.from_wedge(w)


# ---------------------------------------------------------------------------
# displayed action values used to fix GENERATOR_SCALE


def rescaling_equations():
    """The eight displayed action equations as (name, generator, vector, expected).

    Vectors and expected values are octonions with coefficients in Q[D, 1/D]."""
    D = LaurentPoly.var(("D",), "D")
    one = LaurentPoly.const(("D",), Fraction(1))
    b = lambda n, c=one: Octonion.basis(n, c)
    y0 = b("s4") - b("t4")
    x = b("s2") + b("t2", D)
    zero = Octonion([LaurentPoly(("D",))] * 8)
    return [
        ("E_ij.(s4-t4)=0", ["E12", "E13", "E23"], y0, zero),
        ("v1.(s4-t4)=s1", ["v1"], y0, b("s1")),
        ("delta3.(s4-t4)=t3", ["delta3"], y0, b("t3")),
        ("E12.(s2+Dt2)=s1", ["E12"], x, b("s1")),
        ("E23.(s2+Dt2)=Dt3", ["E23"], x, b("t3", D)),
        ("E13.(s2+Dt2)=0", ["E13"], x, zero),
        ("v1.(s2+Dt2)=t3", ["v1"], x, b("t3")),
        ("delta3.(s2+Dt2)=-Ds1", ["delta3"], x, b("s1", -D)),
    ]


def check_rescaling_equations(ctx: Optional[G2Context] = None) -> List[Tuple[str, bool, str]]:
    """Evaluate each displayed equation with the recorded scalars."""
    ctx = ctx or build_g2()
    out = []
    for name, gens, vec, expected in rescaling_equations():
        ok = True
        got_txt = []
        for g in gens:
            X = ctx.named[g].scale(GENERATOR_SCALE.get(g, Fraction(1)))
            got = act(X, vec)
            got_txt.append(repr(got))
            ok = ok and got == expected
        out.append((name, ok, "; ".join(got_txt)))
    return out


def solve_generator_scalars(ctx: Optional[G2Context] = None) -> Dict[str, object]:
    """Per-generator scalars forced by each displayed equation, or a conflict.

    Returns generator -> list of (equation, forced scalar or None when the
    equation holds for every scalar)."""
    ctx = ctx or build_g2()
    forced: Dict[str, List[Tuple[str, object]]] = {}
    for name, gens, vec, expected in rescaling_equations():
        for g in gens:
            got = act(ctx.named[g], vec)
            if not any(expected.coords):
                forced.setdefault(g, []).append((name, None if not any(got.coords) else "unsatisfiable"))
                continue
            ratio = None
            for a, e in zip(got.coords, expected.coords):
                if e:
                    q = e.divexact(a) if a else None
                    if q is None or (ratio is not None and q != ratio):
                        ratio = "unsatisfiable"
                        break
                    ratio = q
                elif a:
                    ratio = "unsatisfiable"
                    break
            forced.setdefault(g, []).append((name, ratio))
    return forced
