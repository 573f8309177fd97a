"""Exact scalars, sparse linear algebra and Laurent polynomials.

Everything here is exact.  Rationals are ``fractions.Fraction``; ``Gaussian``
adjoins a square root of -1; ``LaurentPoly`` is a sparse multivariate Laurent
polynomial whose coefficients are rationals (or Gaussians).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

QQ = Fraction

Vector = Dict[int, object]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like "3/4" to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


# ---------------------------------------------------------------------------
# Gaussian rationals


class Gaussian:
    """a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_rational(re)
        self.im = as_rational(im)

    @staticmethod
    def _lift(x):
        if isinstance(x, Gaussian):
            return x
        if isinstance(x, (int, Fraction)):
            return Gaussian(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = Gaussian._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        o = Gaussian._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = Gaussian._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = Gaussian._lift(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        p = self * o.conjugate()
        return Gaussian(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        return Gaussian._lift(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (Gaussian(1) / self) ** (-n)
        out, base = Gaussian(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = Gaussian._lift(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def is_real(self) -> bool:
        return self.im == 0


I = Gaussian(0, 1)


def scalar_to_json(x):
    if isinstance(x, Gaussian):
        return {"re": scalar_to_json(x.re), "im": scalar_to_json(x.im)}
    if isinstance(x, LaurentPoly):
        return str(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return Gaussian(as_rational(obj["re"]), as_rational(obj["im"]))
    return as_rational(obj)


def is_zero(x) -> bool:
    return not x


# ---------------------------------------------------------------------------
# Sparse matrices


class Matrix:
    """Sparse matrix with entries keyed by (row, col); zeros are never stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Optional[Mapping[Tuple[int, int], object]] = None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry {(r, c)} outside {rows}x{cols}")
            if v:
                self.entries[(r, c)] = v

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[object]]) -> "Matrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        ent = {(i, j): v for i, row in enumerate(data) for j, v in enumerate(row) if v}
        return cls(rows, cols, ent)

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[int, object]], rows: int) -> "Matrix":
        ent = {(r, j): v for j, col in enumerate(columns) for r, v in col.items()}
        return cls(rows, len(columns), ent)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    def to_dense(self, zero=0) -> List[List[object]]:
        out = [[zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def row_dicts(self) -> List[Vector]:
        rows: List[Vector] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def col_dicts(self) -> List[Vector]:
        cols: List[Vector] = [dict() for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return cols

    def __getitem__(self, rc):
        return self.entries.get(rc, 0)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def apply(self, v: Mapping[int, object]) -> Vector:
        """Matrix times a sparse vector."""
        cols = self.col_dicts()
        out: Vector = {}
        for j, x in v.items():
            for i, a in cols[j].items():
                vec_add_into(out, i, a * x)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        left = self.row_dicts()
        right = other.row_dicts()
        ent: Dict[Tuple[int, int], object] = {}
        for i, row in enumerate(left):
            acc: Vector = {}
            for k, a in row.items():
                for j, b in right[k].items():
                    vec_add_into(acc, j, a * b)
            for j, v in acc.items():
                ent[(i, j)] = v
        return Matrix(self.rows, other.cols, ent)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        ent = dict(self.entries)
        for k, v in other.entries.items():
            s = ent.get(k, 0) + v
            if s:
                ent[k] = s
            else:
                ent.pop(k, None)
        return Matrix(self.rows, self.cols, ent)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, s) -> "Matrix":
        return Matrix(self.rows, self.cols, {k: v * s for k, v in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def is_zero(self) -> bool:
        return not self.entries

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


def vec_add_into(v: Vector, i: int, x) -> None:
    if not x:
        return
    s = v.get(i, 0) + x
    if s:
        v[i] = s
    else:
        v.pop(i, None)


def vec_axpy(y: Vector, a, x: Mapping[int, object]) -> None:
    """y += a*x in place."""
    if not a:
        return
    for i, xi in x.items():
        vec_add_into(y, i, a * xi)


def vec_scale(v: Mapping[int, object], a) -> Vector:
    if not a:
        return {}
    return {i: a * x for i, x in v.items()}


def vec_dot(u: Mapping[int, object], v: Mapping[int, object]):
    if len(u) > len(v):
        u, v = v, u
    s = 0
    for i, x in u.items():
        y = v.get(i)
        if y is not None:
            s = s + x * y
    return s


def dense_to_vec(xs: Sequence[object]) -> Vector:
    return {i: x for i, x in enumerate(xs) if x}


def vec_to_dense(v: Mapping[int, object], n: int, zero=0) -> List[object]:
    out = [zero] * n
    for i, x in v.items():
        out[i] = x
    return out


# ---------------------------------------------------------------------------
# Row reduction over a field


class Echelon:
    """Incrementally maintained reduced row echelon form over a field.

    Rows are sparse dicts.  Pivot columns are chosen among the entries of the
    reduced incoming row so as to touch the fewest existing pivot rows.
    """

    def __init__(self):
        self.pivots: Dict[int, Vector] = {}
        self._col_users: Dict[int, set] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: Mapping[int, object]) -> Vector:
        r = dict(row)
        # pivot rows are fully reduced, so a single pass clears every pivot column
        for p in [c for c in list(r) if c in self.pivots]:
            a = r.get(p)
            if a:
                vec_axpy(r, -a, self.pivots[p])
        return r

    def add(self, row: Mapping[int, object], avoid: Optional[int] = None) -> Optional[int]:
        """Insert a row; return its new pivot column or None if dependent.

        ``avoid`` names a column that may only become a pivot as a last resort
        (used for the augmented column when solving systems).
        """
        r = self.reduce(row)
        if not r:
            return None
        users = self._col_users
        cand = [c for c in r if c != avoid] or list(r)
        piv = min(cand, key=lambda c: (len(users.get(c, ())), c))
        inv = 1 / r[piv]
        r = {c: v * inv for c, v in r.items()}
        for q in list(users.get(piv, ())):
            prow = self.pivots[q]
            a = prow.get(piv)
            if not a:
                continue
            before = set(prow)
            vec_axpy(prow, -a, r)
            after = set(prow)
            for c in before - after:
                users[c].discard(q)
            for c in after - before:
                users.setdefault(c, set()).add(q)
        self.pivots[piv] = r
        for c in r:
            users.setdefault(c, set()).add(piv)
        return piv


def _rows_of(m) -> List[Vector]:
    if isinstance(m, Matrix):
        return m.row_dicts()
    return [dict(r) if isinstance(r, Mapping) else dense_to_vec(r) for r in m]


def _is_field_row(rows: Iterable[Mapping[int, object]]) -> bool:
    for r in rows:
        for v in r.values():
            return not isinstance(v, LaurentPoly)
    return True


def rank(m) -> int:
    """Rank of a Matrix (or list of rows); works over Q, Q(i), or Laurent rings."""
    rows = _rows_of(m)
    if not _is_field_row(rows):
        return _domain_rank(rows)
    e = Echelon()
    for r in rows:
        e.add(r)
    return len(e)


def kernel_basis(m: Matrix) -> List[Vector]:
    """Exact basis of the right null space of ``m``."""
    rows = m.row_dicts()
    if not _is_field_row(rows):
        return _domain_kernel(rows, m.cols)
    e = Echelon()
    for r in rows:
        e.add(r)
    pivots = e.pivots
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v: Vector = {f: Fraction(1)}
        for p, prow in pivots.items():
            a = prow.get(f)
            if a:
                v[p] = -a
        basis.append(v)
    return basis


def solve_linear(m: Matrix, b: Sequence[object] | Mapping[int, object]) -> Optional[Vector]:
    """Exact solution x of m x = b, or None if the system is inconsistent."""
    bv = dict(b) if isinstance(b, Mapping) else dense_to_vec(b)
    if any(i >= m.rows or i < 0 for i in bv):
        raise ValueError("right-hand side does not match the number of rows")
    if not isinstance(b, Mapping) and len(b) != m.rows:
        raise ValueError("right-hand side does not match the number of rows")
    n = m.cols
    e = Echelon()
    for i, r in enumerate(m.row_dicts()):
        aug = dict(r)
        if i in bv:
            aug[n] = bv[i]
        e.add(aug, avoid=n)
    if n in e.pivots:
        return None
    x: Vector = {}
    for p, prow in e.pivots.items():
        val = prow.get(n)
        if val:
            x[p] = val
    return x


def span_basis(vectors: Iterable[Mapping[int, object]]) -> List[Vector]:
    """A linearly independent subset spanning the same space (input order kept)."""
    e = Echelon()
    out = []
    for v in vectors:
        if e.add(v) is not None:
            out.append(dict(v))
    return out


def in_span(vectors: Sequence[Mapping[int, object]], target: Mapping[int, object]) -> bool:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return not e.reduce(target)


def coordinates_in(vectors: Sequence[Mapping[int, object]], target: Mapping[int, object]) -> Optional[List[object]]:
    """Coefficients c with sum c_k vectors[k] = target, or None."""
    dim = 1 + max([max(v) for v in vectors if v] + [max(target) if target else 0])
    m = Matrix.from_columns(list(vectors), dim)
    sol = solve_linear(m, dict(target))
    if sol is None:
        return None
    return [sol.get(k, Fraction(0)) for k in range(len(vectors))]


def invert_dense(a: List[List[object]]) -> List[List[object]]:
    """Inverse of a small dense matrix over a field (Gauss-Jordan)."""
    n = len(a)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def det_dense(a: Sequence[Sequence[object]]):
    """Determinant by fraction-free elimination (works over any exact domain)."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = 1
    for k in range(n - 1):
        p = next((r for r in range(k, n) if m[r][k]), None)
        if p is None:
            return m[0][0] * 0
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_div(num, prev)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def _exact_div(a, b):
    if isinstance(a, LaurentPoly) or isinstance(b, LaurentPoly):
        return LaurentPoly.coerce(a, _vars_of(a, b)).divexact(LaurentPoly.coerce(b, _vars_of(a, b)))
    return a / b


def _vars_of(*xs):
    for x in xs:
        if isinstance(x, LaurentPoly):
            return x.variables
    return ()


def _domain_echelon(rows: List[Vector], ncols: int):
    """Fraction-free (Bareiss) echelon form for entries in an integral domain."""
    m = [dict(r) for r in rows if r]
    pivots: List[Tuple[int, int]] = []
    prev = 1
    r0 = 0
    for c in range(ncols):
        p = next((i for i in range(r0, len(m)) if m[i].get(c)), None)
        if p is None:
            continue
        m[r0], m[p] = m[p], m[r0]
        piv = m[r0][c]
        for i in range(r0 + 1, len(m)):
            a = m[i].get(c)
            new: Vector = {}
            cols = set(m[i]) | set(m[r0])
            for j in cols:
                if j < c:
                    continue
                val = m[i].get(j, 0) * piv - (a or 0) * m[r0].get(j, 0)
                if val:
                    val = _exact_div(val, prev)
                if val:
                    new[j] = val
            new.pop(c, None)
            m[i] = new
        prev = piv
        pivots.append((r0, c))
        r0 += 1
        if r0 == len(m):
            break
    return m[:r0], pivots


def _domain_rank(rows: List[Vector]) -> int:
    ncols = 1 + max((max(r) for r in rows if r), default=-1)
    _, piv = _domain_echelon(rows, ncols)
    return len(piv)


def _domain_kernel(rows: List[Vector], ncols: int) -> List[Vector]:
    ech, piv = _domain_echelon(rows, ncols)
    pivot_cols = [c for _, c in piv]
    free = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free:
        # back substitution with cross-multiplication, denominators never formed
        x: Vector = {f: 1}
        for (ri, c) in reversed(piv):
            row = ech[ri]
            s = 0
            for j, a in row.items():
                if j != c and j in x:
                    s = s + a * x[j]
            d = row[c]
            x = {j: v * d for j, v in x.items()}
            if s:
                x[c] = -s
        basis.append({j: v for j, v in x.items() if v})
    return basis


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Sparse Laurent polynomial in a fixed ordered tuple of variables.

    Terms map exponent tuples (negative entries allowed) to coefficients.
    Monomials are ordered lexicographically on the variable list.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Tuple[int, ...], object]] = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        t = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError("exponent length does not match variables")
            if c:
                t[e] = t.get(e, 0) + c
                if not t[e]:
                    del t[e]
        self.terms = t

    # constructors
    @classmethod
    def const(cls, variables: Sequence[str], c) -> "LaurentPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str, power: int = 1) -> "LaurentPoly":
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = power
        return cls(variables, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], c=Fraction(1)) -> "LaurentPoly":
        return cls(variables, {tuple(exps): c})

    @classmethod
    def coerce(cls, x, variables: Sequence[str]) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            if x.variables != tuple(variables):
                raise ValueError(f"variable mismatch {x.variables} vs {tuple(variables)}")
            return x
        return cls.const(variables, x)

    def _other(self, o):
        if isinstance(o, LaurentPoly):
            if o.variables != self.variables:
                raise ValueError(f"variable mismatch {self.variables} vs {o.variables}")
            return o
        if isinstance(o, (int, Fraction, Gaussian)):
            return LaurentPoly.const(self.variables, o)
        return None

    # ring operations
    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for e, c in o.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return LaurentPoly(self.variables, t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        t: Dict[Tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e, 0) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        return LaurentPoly(self.variables, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPoly(self.variables, {tuple(-k * (-n) for k in e): (1 / Fraction(c) if not isinstance(c, Gaussian) else 1 / c) ** (-n)})
        out = LaurentPoly.const(self.variables, Fraction(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction, Gaussian)):
            inv = 1 / (Fraction(o) if isinstance(o, int) else o)
            return LaurentPoly(self.variables, {e: c * inv for e, c in self.terms.items()})
        o = self._other(o)
        if o.is_monomial():
            return self * o ** -1
        return self.divexact(o)

    def __rtruediv__(self, o):
        return LaurentPoly.coerce(o, self.variables) / self

    def __eq__(self, o):
        o2 = self._other(o) if not isinstance(o, LaurentPoly) or o.variables == self.variables else None
        if o2 is None:
            return False
        return self.terms == o2.terms

    def __hash__(self):
        if not self.terms:
            return hash(0)
        if set(self.terms) == {(0,) * len(self.variables)}:
            return hash(self.terms[(0,) * len(self.variables)])
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # queries
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * len(self.variables)}

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), Fraction(0))

    def leading(self) -> Tuple[Tuple[int, ...], object]:
        e = max(self.terms)
        return e, self.terms[e]

    def min_exponents(self) -> Tuple[int, ...]:
        n = len(self.variables)
        return tuple(min(e[i] for e in self.terms) for i in range(n)) if self.terms else (0,) * n

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        return LaurentPoly(self.variables, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def eval(self, point: Mapping[str, object] | Sequence[object]):
        """Exact value at a point; zero coordinates are allowed only for nonnegative exponents."""
        if isinstance(point, Mapping):
            vals = [point[v] for v in self.variables]
        else:
            vals = list(point)
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(vals, e):
                if k < 0 and not x:
                    raise ZeroDivisionError("evaluation at zero of a negative power")
                if k:
                    xx = Fraction(x) if isinstance(x, int) else x
                    term = term * (xx ** k)
            total = total + term
        return total

    def substitute(self, mapping: Mapping[str, object]) -> "LaurentPoly":
        """Replace some variables by scalars or Laurent polynomials in the same variables."""
        out = LaurentPoly(self.variables)
        for e, c in self.terms.items():
            term = LaurentPoly.const(self.variables, c)
            for v, k in zip(self.variables, e):
                if not k:
                    continue
                if v in mapping:
                    x = mapping[v]
                    if isinstance(x, LaurentPoly):
                        term = term * x ** k
                    else:
                        xx = Fraction(x) if isinstance(x, int) else x
                        term = term * (xx ** k)
                else:
                    term = term * LaurentPoly.var(self.variables, v, k)
            out = out + term
        return out

    def divexact(self, d: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / d; raises ArithmeticError if d does not divide."""
        d = self._other(d)
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly(self.variables)
        ms, md = self.min_exponents(), d.min_exponents()
        p = self.shift([-k for k in ms])
        dd = d.shift([-k for k in md])
        q, r = _poly_divmod(p, dd)
        if r:
            raise ArithmeticError("Laurent division is not exact")
        return q.shift([a - b for a, b in zip(ms, md)])

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.variables, e) if k
            )
            cs = scalar_to_json(c) if not isinstance(c, Gaussian) else f"({c.re}+{c.im}i)"
            if not mono:
                parts.append(str(cs))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _poly_divmod(p: LaurentPoly, d: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Lex-order division of polynomials with nonnegative exponents."""
    lead_e, lead_c = d.leading()
    rem = dict(p.terms)
    quo: Dict[Tuple[int, ...], object] = {}
    out_rem: Dict[Tuple[int, ...], object] = {}
    heap = [tuple(-k for k in e) for e in rem]
    heapq.heapify(heap)
    inv = 1 / lead_c if isinstance(lead_c, Gaussian) else 1 / Fraction(lead_c)
    dterms = list(d.terms.items())
    while heap:
        neg = heapq.heappop(heap)
        e = tuple(-k for k in neg)
        c = rem.get(e)
        if not c:
            continue
        shift = tuple(a - b for a, b in zip(e, lead_e))
        if min(shift) < 0:
            out_rem[e] = c
            del rem[e]
            continue
        f = c * inv
        quo[shift] = quo.get(shift, 0) + f
        for de, dc in dterms:
            ne = tuple(a + b for a, b in zip(de, shift))
            old = rem.get(ne)
            s = (old or 0) - f * dc
            if s:
                if not old:
                    heapq.heappush(heap, tuple(-k for k in ne))
                rem[ne] = s
            else:
                rem.pop(ne, None)
    return LaurentPoly(p.variables, quo), LaurentPoly(p.variables, out_rem)


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def laurent_eval(p: LaurentPoly, point):
    return p.eval(point)


def square_free_part(q) -> int:
    """Square-free integer in the same rational square class as q != 0."""
    q = as_rational(q)
    if not q:
        raise ValueError("zero has no square class")
    n = abs(q.numerator) * q.denominator
    sign = -1 if q < 0 else 1
    out = 1
    p = 2
    while p * p <= n:
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        if k % 2:
            out *= p
        p += 1 if p == 2 else 2
    out *= n
    return sign * out


def rational_sqrt(q) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    from math import isqrt

    q = as_rational(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None
