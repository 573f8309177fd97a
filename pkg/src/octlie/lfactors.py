"""Satake-parameter calculus on the G2 torus: Std and Spin eigenvalues,
local factors det(1 - X rho(s)) and the Hecke polynomial.

A parameter is a pair (u1, u2) of nonzero exact scalars, or the symbolic
pair of Laurent variables.  Every eigenvalue is a Laurent monomial in
(u1, u2); numeric parameters are handled by evaluating those monomials, so no
square root ever appears.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

from .exactmath import Gaussian, LaurentPoly, scalar_to_json

U_VARS = ("u1", "u2")

STD_EXPONENTS: Tuple[Tuple[int, int], ...] = ((0, 0), (1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1))


def spin_exponents() -> List[Tuple[int, int]]:
    """u1^(e1/2) u2^(e2/2) u3^(e3/2) with u3 = 1/(u1 u2), over sign vectors e."""
    out = []
    for e1, e2, e3 in product((1, -1), repeat=3):
        a, b = e1 - e3, e2 - e3
        assert a % 2 == 0 and b % 2 == 0
        out.append((a // 2, b // 2))
    return out


@dataclass(frozen=True)
class G2SatakeParam:
    u1: object
    u2: object

    def __post_init__(self):
        if not self.u1 or not self.u2:
            raise ValueError("Satake coordinates must be nonzero")

    @classmethod
    def symbolic(cls) -> "G2SatakeParam":
        return cls(LaurentPoly.var(U_VARS, "u1"), LaurentPoly.var(U_VARS, "u2"))

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.u1, LaurentPoly)

    def monomial(self, exps: Tuple[int, int]):
        if self.is_symbolic:
            return LaurentPoly.monomial(U_VARS, exps)
        val = Fraction(1)
        for x, k in zip((self.u1, self.u2), exps):
            val = val * _power(x, k)
        return val

    def weyl_orbit(self) -> List["G2SatakeParam"]:
        """Orbit under the Weyl group of G2.

        Generated by u1 <-> u2, (u1, u2) -> (u1, 1/(u1 u2)) and the central
        element -1, which inverts both coordinates.
        """
        seen = []
        frontier = [self]
        while frontier:
            p = frontier.pop()
            if any(_same(p, q) for q in seen):
                continue
            seen.append(p)
            frontier.append(G2SatakeParam(p.u2, p.u1))
            frontier.append(G2SatakeParam(p.u1, _inv(p.u1 * p.u2)))
            frontier.append(G2SatakeParam(_inv(p.u1), _inv(p.u2)))
        return seen


def _inv(x):
    if isinstance(x, LaurentPoly):
        if not x.is_monomial():
            raise ArithmeticError("only monomials are invertible")
        (e, c), = x.terms.items()
        return LaurentPoly(x.variables, {tuple(-k for k in e): 1 / c})
    return 1 / (Fraction(x) if isinstance(x, int) else x)


def _power(x, k: int):
    if k >= 0:
        out = Fraction(1)
        for _ in range(k):
            out = out * x
        return out
    return _power(_inv(x), -k)


def _same(p, q) -> bool:
    return not (p.u1 - q.u1) and not (p.u2 - q.u2)


def std_eigenvalues(p: G2SatakeParam) -> list:
    return [p.monomial(e) for e in STD_EXPONENTS]


def spin_eigenvalues(p: G2SatakeParam) -> list:
    return [p.monomial(e) for e in spin_exponents()]


def _key(x):
    if isinstance(x, LaurentPoly):
        return tuple(sorted((e, str(c)) for e, c in x.terms.items()))
    if isinstance(x, Gaussian):
        return (x.re, x.im)
    return (Fraction(x), Fraction(0))


def same_multiset(a: Sequence[object], b: Sequence[object]) -> bool:
    return Counter(map(_key, a)) == Counter(map(_key, b))


def _x_vars(p: G2SatakeParam) -> Tuple[str, ...]:
    return U_VARS + ("X",) if p.is_symbolic else ("X",)


def _lift(x, variables):
    """Embed an eigenvalue into the polynomial ring that also contains X."""
    if isinstance(x, LaurentPoly):
        return LaurentPoly(variables, {e + (0,): c for e, c in x.terms.items()})
    return LaurentPoly.const(variables, x)


def local_factor(eigs: Sequence[object], p: G2SatakeParam) -> LaurentPoly:
    """prod (1 - lambda X) over the multiset."""
    variables = _x_vars(p)
    X = LaurentPoly.var(variables, "X")
    out = LaurentPoly.const(variables, 1)
    for lam in eigs:
        out = out * (LaurentPoly.const(variables, 1) - _lift(lam, variables) * X)
    return out


def zeta_factor(p: G2SatakeParam) -> LaurentPoly:
    variables = _x_vars(p)
    return LaurentPoly.const(variables, 1) - LaurentPoly.var(variables, "X")


def factorization_check(p: G2SatakeParam) -> bool:
    """det(1 - X Spin) == (1 - X) det(1 - X Std), exactly."""
    spin = local_factor(spin_eigenvalues(p), p)
    std = local_factor(std_eigenvalues(p), p)
    return not (spin - zeta_factor(p) * std)


def hecke_polynomial(ell: int, p: G2SatakeParam) -> LaurentPoly:
    """prod (T - ell^3 lambda) over the spin eigenvalues."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    variables = U_VARS + ("T",) if p.is_symbolic else ("T",)
    T = LaurentPoly.var(variables, "T")
    out = LaurentPoly.const(variables, 1)
    for lam in spin_eigenvalues(p):
        out = out * (T - _lift(lam, variables) * (ell ** 3))
    return out


def hecke_roots(ell: int, p: G2SatakeParam) -> list:
    return [lam * (ell ** 3) for lam in spin_eigenvalues(p)]


def _conj(x):
    return x.conjugate() if isinstance(x, Gaussian) else x


def roots_have_modulus(ell: int, p: G2SatakeParam) -> bool:
    """Every root r satisfies r * conj(r) == ell^6 (exact)."""
    target = ell ** 6
    return all(not (r * _conj(r) - target) for r in hecke_roots(ell, p))


def root_of_unity(order: int, k: int = 1):
    """Exact roots of unity available over Q(i): orders 1, 2, 4."""
    table = {
        1: [Fraction(1)],
        2: [Fraction(1), Fraction(-1)],
        4: [Gaussian(1, 0), Gaussian(0, 1), Gaussian(-1, 0), Gaussian(0, -1)],
    }
    if order not in table:
        raise ValueError("only orders 1, 2, 4 are exact over Q(i)")
    return table[order][k % order]


def poly_to_json(f: LaurentPoly) -> dict:
    return {
        "variables": list(f.variables),
        "terms": [[list(e), scalar_to_json(c)] for e, c in sorted(f.terms.items())],
    }


def eig_to_json(x) -> object:
    return str(x) if isinstance(x, LaurentPoly) else scalar_to_json(x)


def report(p: G2SatakeParam, ell: int = 2) -> dict:
    return {
        "std_eigs": [eig_to_json(x) for x in std_eigenvalues(p)],
        "spin_eigs": [eig_to_json(x) for x in spin_eigenvalues(p)],
        "spin_factor": str(local_factor(spin_eigenvalues(p), p)),
        "std_factor": str(local_factor(std_eigenvalues(p), p)),
        "zeta_factor": str(zeta_factor(p)),
        "factorization_ok": factorization_check(p),
        "hecke_poly": str(hecke_polynomial(ell, p)),
    }
