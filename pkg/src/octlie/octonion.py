"""Split octonions over Q in the basis s1, s2, s3, t1, t2, t3, s4, t4.

The identity is 1 = s4 + t4.  Coefficients are duck-typed: Fractions, Gaussians
or ``LaurentPoly`` values (so a parameter D can stay symbolic).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

BASIS = ("s1", "s2", "s3", "t1", "t2", "t3", "s4", "t4")
INDEX = {name: k for k, name in enumerate(BASIS)}

# Product of basis elements, row times column.  "0" means zero, a leading "-"
# negates.  Verbatim transcription of the defining multiplication table.
_TABLE_ROWS = {
    "s1": ("0", "-t3", "t2", "s4", "0", "0", "0", "s1"),
    "s2": ("t3", "0", "-t1", "0", "s4", "0", "0", "s2"),
    "s3": ("-t2", "t1", "0", "0", "0", "s4", "0", "s3"),
    "t1": ("t4", "0", "0", "0", "s3", "-s2", "t1", "0"),
    "t2": ("0", "t4", "0", "-s3", "0", "s1", "t2", "0"),
    "t3": ("0", "0", "t4", "s2", "-s1", "0", "t3", "0"),
    "s4": ("s1", "s2", "s3", "0", "0", "0", "s4", "0"),
    "t4": ("0", "0", "0", "t1", "t2", "t3", "0", "t4"),
}


def _parse(entry: str) -> Tuple[int, int] | None:
    if entry == "0":
        return None
    if entry.startswith("-"):
        return -1, INDEX[entry[1:]]
    return 1, INDEX[entry]


def multiplication_table() -> Dict[Tuple[str, str], str]:
    """The 64 basis products as strings, keyed by (row, column)."""
    return {(r, BASIS[j]): e for r, row in _TABLE_ROWS.items() for j, e in enumerate(row)}


_MUL: List[List[Tuple[int, int] | None]] = [
    [_parse(e) for e in _TABLE_ROWS[name]] for name in BASIS
]
_NONZERO = [[(j, e[0], e[1]) for j, e in enumerate(row) if e is not None] for row in _MUL]
_CONJ_SIGN = (-1, -1, -1, -1, -1, -1, None, None)


class Octonion:
    """Immutable split octonion with 8 coordinates in the fixed basis order."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[object]):
        if len(coords) != 8:
            raise ValueError("an octonion has 8 coordinates")
        self.coords = tuple(Fraction(c) if isinstance(c, int) else c for c in coords)

    @classmethod
    def zero(cls) -> "Octonion":
        return cls([Fraction(0)] * 8)

    @classmethod
    def basis(cls, name: str, coeff=Fraction(1)) -> "Octonion":
        c = [Fraction(0)] * 8
        c[INDEX[name]] = coeff
        return cls(c)

    @classmethod
    def one(cls) -> "Octonion":
        return cls.basis("s4") + cls.basis("t4")

    @classmethod
    def from_dict(cls, d: Dict[str, object]) -> "Octonion":
        c = [Fraction(0)] * 8
        for k, v in d.items():
            c[INDEX[k]] = c[INDEX[k]] + v
        return cls(c)

    def __getitem__(self, name: str):
        return self.coords[INDEX[name]]

    def __add__(self, o: "Octonion") -> "Octonion":
        return Octonion([a + b for a, b in zip(self.coords, o.coords)])

    def __sub__(self, o: "Octonion") -> "Octonion":
        return Octonion([a - b for a, b in zip(self.coords, o.coords)])

    def __neg__(self) -> "Octonion":
        return Octonion([-a for a in self.coords])

    def scale(self, s) -> "Octonion":
        return Octonion([s * a for a in self.coords])

    def __rmul__(self, s) -> "Octonion":
        return self.scale(s)

    def __mul__(self, o):
        if isinstance(o, Octonion):
            return mul(self, o)
        return self.scale(o)

    def __eq__(self, o) -> bool:
        return isinstance(o, Octonion) and all(not (a - b) for a, b in zip(self.coords, o.coords))

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(bool(a) for a in self.coords)

    def __repr__(self):
        parts = [f"{c}*{n}" for n, c in zip(BASIS, self.coords) if c]
        return "Octonion(" + (" + ".join(parts) if parts else "0") + ")"

    def to_json(self) -> List[object]:
        from .exactmath import scalar_to_json

        return [scalar_to_json(c) for c in self.coords]


def _common_denominator(coords) -> Optional[int]:
    """lcm of the denominators when every coordinate is rational, else None."""
    d = 1
    for c in coords:
        if type(c) is Fraction:
            q = c.denominator
            if q != 1:
                d = d * q // gcd(d, q)
        elif type(c) is not int:
            return None
    return d


def _cleared(c, d: int) -> int:
    if type(c) is int:
        return c * d
    return c.numerator * (d // c.denominator)


def _mul_raw(xc, yc) -> List[object]:
    out: List[object] = [0] * 8
    for i, a in enumerate(xc):
        if not a:
            continue
        for j, sign, k in _NONZERO[i]:
            b = yc[j]
            if b:
                out[k] = out[k] + a * b if sign > 0 else out[k] - a * b
    return out


def mul(x: Octonion, y: Octonion) -> Octonion:
    dx, dy = _common_denominator(x.coords), _common_denominator(y.coords)
    if dx is None or dy is None:
        return Octonion(_mul_raw(x.coords, y.coords))
    # integer arithmetic on cleared denominators
    xi = [_cleared(c, dx) for c in x.coords]
    yi = [_cleared(c, dy) for c in y.coords]
    d = dx * dy
    return Octonion([Fraction(v, d) for v in _mul_raw(xi, yi)])


def conj(x: Octonion) -> Octonion:
    c = x.coords
    return Octonion([-c[0], -c[1], -c[2], -c[3], -c[4], -c[5], c[7], c[6]])


def trace(x: Octonion):
    """Tr(x) with x + conj(x) = Tr(x) * 1."""
    return x.coords[6] + x.coords[7]


def norm(x: Octonion):
    """N(x) with x * conj(x) = N(x) * 1."""
    c = x.coords
    return c[6] * c[7] - (c[0] * c[3] + c[1] * c[4] + c[2] * c[5])


def trace_pairing(x: Octonion, y: Octonion):
    """The symmetric form Tr(x * conj(y))."""
    return trace(mul(x, conj(y)))


def is_scalar(x: Octonion) -> bool:
    """True when x is a multiple of the identity s4 + t4."""
    c = x.coords
    return all(not v for v in c[:6]) and not (c[6] - c[7])


def scalar_part(x: Octonion):
    if not is_scalar(x):
        raise ValueError("not a multiple of 1")
    return x.coords[6]


# V7: trace-zero octonions, basis s1, s2, s3, t1, t2, t3, y0 = s4 - t4
V7_BASIS_NAMES = ("s1", "s2", "s3", "t1", "t2", "t3", "y0")


def v7_basis() -> List[Octonion]:
    out = [Octonion.basis(n) for n in BASIS[:6]]
    out.append(Octonion.basis("s4") - Octonion.basis("t4"))
    return out


def to_v7(x: Octonion) -> List[object]:
    """Coordinates of a trace-zero octonion in the V7 basis."""
    if trace(x):
        raise ValueError("octonion is not trace zero")
    return list(x.coords[:6]) + [x.coords[6]]


def from_v7(v: Sequence[object]) -> Octonion:
    return Octonion(list(v[:6]) + [v[6], -v[6]])


def is_trace_zero(x: Octonion) -> bool:
    return not trace(x)
