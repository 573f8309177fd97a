from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from octlie.exactmath import LaurentPoly
from octlie.lfactors import (
    G2SatakeParam,
    factorization_check,
    hecke_polynomial,
    hecke_roots,
    local_factor,
    report,
    root_of_unity,
    roots_have_modulus,
    same_multiset,
    spin_eigenvalues,
    std_eigenvalues,
    zeta_factor,
)

F = Fraction


def poly_from_roots(eigs):
    """Coefficients of prod (1 - e X), lowest degree first (plain list arithmetic)."""
    coeffs = [F(1)]
    for e in eigs:
        nxt = coeffs + [F(0)]
        for k in range(len(coeffs)):
            nxt[k + 1] -= e * coeffs[k]
        coeffs = nxt
    return coeffs


def coeff_list(f: LaurentPoly, var_index=0):
    deg = max(e[var_index] for e in f.terms)
    out = [F(0)] * (deg + 1)
    for e, c in f.terms.items():
        out[e[var_index]] += c
    return out


def test_eigenvalues_at_2_3():
    p = G2SatakeParam(F(2), F(3))
    assert sorted(std_eigenvalues(p)) == sorted([F(1), F(2), F(3), F(6), F(1, 2), F(1, 3), F(1, 6)])
    assert sorted(spin_eigenvalues(p)) == sorted([F(1), F(1), F(2), F(3), F(6), F(1, 2), F(1, 3), F(1, 6)])


def test_local_factor_matches_list_oracle():
    p = G2SatakeParam(F(2), F(3))
    eigs = spin_eigenvalues(p)
    assert coeff_list(local_factor(eigs, p)) == poly_from_roots(eigs)


def test_trivial_parameter():
    p = G2SatakeParam(F(1), F(1))
    assert coeff_list(local_factor(spin_eigenvalues(p), p)) == [F(1), F(-8), F(28), F(-56), F(70), F(-56), F(28), F(-8), F(1)]
    # (T - 8)^8 at ell = 2
    h = hecke_polynomial(2, p)
    assert coeff_list(h) == [comb(8, k) * (-8) ** (8 - k) for k in range(9)]


def test_symbolic_factorization():
    p = G2SatakeParam.symbolic()
    assert factorization_check(p)
    assert same_multiset(spin_eigenvalues(p), std_eigenvalues(p) + [LaurentPoly.const(("u1", "u2"), 1)])


def test_factorization_detects_a_wrong_multiset():
    p = G2SatakeParam(F(2), F(3))
    bad = std_eigenvalues(p)[:-1] + [F(5), F(1)]
    assert local_factor(bad, p) != zeta_factor(p) * local_factor(std_eigenvalues(p), p)


def test_weyl_orbit_generic():
    p = G2SatakeParam(F(2), F(3))
    orbit = p.weyl_orbit()
    assert len(orbit) == 12
    for q in orbit:
        assert same_multiset(std_eigenvalues(q), std_eigenvalues(p))
        assert same_multiset(spin_eigenvalues(q), spin_eigenvalues(p))
        inv = G2SatakeParam(1 / q.u1, 1 / q.u2)
        assert any(inv == r for r in orbit)


def test_weyl_orbit_of_trivial_parameter():
    assert len(G2SatakeParam(F(1), F(1)).weyl_orbit()) == 1


def test_sign_parameter_roots():
    p = G2SatakeParam(F(-1), F(1))
    roots = hecke_roots(3, p)
    assert sorted(roots) == sorted([F(27)] * 4 + [F(-27)] * 4)


@pytest.mark.parametrize("k1,k2", [(1, 0), (1, 1), (2, 3), (3, 1)])
def test_unitary_parameter_modulus(k1, k2):
    p = G2SatakeParam(root_of_unity(4, k1), root_of_unity(4, k2))
    assert roots_have_modulus(5, p)


def test_nonunitary_parameter_fails_modulus():
    assert not roots_have_modulus(5, G2SatakeParam(F(2), F(1)))


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        G2SatakeParam(F(0), F(1))
    with pytest.raises(ValueError):
        hecke_polynomial(1, G2SatakeParam(F(1), F(1)))
    with pytest.raises(ValueError):
        root_of_unity(3)


def test_report_keys():
    r = report(G2SatakeParam(F(2), F(3)), 3)
    assert r["factorization_ok"]
    assert len(r["spin_eigs"]) == 8 and len(r["std_eigs"]) == 7


nonzero = st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(lambda x: x != 0)


@settings(max_examples=100, deadline=None)
@given(nonzero, nonzero)
def test_factorization_random(u1, u2):
    p = G2SatakeParam(u1, u2)
    assert factorization_check(p)
    eigs = spin_eigenvalues(p)
    assert coeff_list(local_factor(eigs, p)) == poly_from_roots(eigs)


@settings(max_examples=40, deadline=None)
@given(nonzero, nonzero)
def test_orbit_invariance_random(u1, u2):
    p = G2SatakeParam(u1, u2)
    orbit = p.weyl_orbit()
    assert 12 % len(orbit) == 0
    for q in orbit:
        assert same_multiset(spin_eigenvalues(q), spin_eigenvalues(p))
