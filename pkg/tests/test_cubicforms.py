from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from octlie.cubicforms import (
    BinaryCubic,
    CubicRing,
    VHVector,
    cubic_ring,
    det2,
    discriminant,
    find_gl2_equivalence,
    gl2_act,
    is_etale,
    psi_D_data,
    psi_v_nondegenerate,
    square_class_of_disc,
    transported_table,
    vh_pairing,
)
from octlie.exactmath import square_free_part

F = Fraction
ints = st.integers(-6, 6)
forms = st.tuples(ints, ints, ints, ints).map(lambda t: BinaryCubic(*t))
mats = st.tuples(ints, ints, ints, ints).map(lambda t: [[F(t[0]), F(t[1])], [F(t[2]), F(t[3])]]).filter(lambda g: det2(g) != 0)

I_, J_ = (0, 1, 0), (0, 0, 1)


def test_split_family_idempotents():
    R = cubic_ring(BinaryCubic(0, 1, -1, 0))
    assert R.mul(I_, I_) == I_
    assert R.mul(J_, J_) == J_
    assert R.mul(I_, J_) == (0, 0, 0)


@pytest.mark.parametrize("D", [2, 3, -1, F(5, 3)])
def test_sqrt_D_family(D):
    D = F(D)
    R = cubic_ring(BinaryCubic(1, 0, -D, 0))
    assert R.mul(I_, J_) == (0, 0, 0)
    assert R.mul(I_, I_) == (D, 0, -1)
    assert R.mul(J_, J_) == (0, 0, D)


def test_zero_form_ring():
    R = cubic_ring(BinaryCubic(0, 0, 0, 0))
    assert R.i_squared == R.j_squared == R.ij == (0, 0, 0)


def test_discriminant_examples():
    assert discriminant(BinaryCubic(0, 1, -1, 0)) == 1
    assert square_class_of_disc(BinaryCubic(0, 1, -1, 0)) == 1
    assert discriminant(BinaryCubic(1, 0, -7, 0)) == 4 * 7**3
    assert square_class_of_disc(BinaryCubic(1, 0, -7, 0)) == 7
    assert discriminant(BinaryCubic(1, 0, 0, 0)) == 0
    assert not is_etale(BinaryCubic(1, 0, 0, 0))
    assert square_class_of_disc(BinaryCubic(1, 0, 0, 0)) is None


def test_gl2_examples():
    half = BinaryCubic(0, F(1, 2), F(1, 2), 0)
    assert gl2_act([[2, 0], [0, -2]], half) == BinaryCubic(0, 1, -1, 0)
    f = BinaryCubic(1, -2, 3, 5)
    assert gl2_act([[1, 0], [0, 1]], f) == f


def test_gl2_rejects_singular():
    with pytest.raises(ValueError):
        gl2_act([[1, 2], [2, 4]], BinaryCubic(1, 0, 0, 1))


def test_find_equivalence():
    g = find_gl2_equivalence(BinaryCubic(0, -1, -1, 0), BinaryCubic(0, 1, -1, 0))
    assert g is not None
    assert gl2_act(g, BinaryCubic(0, -1, -1, 0)) == BinaryCubic(0, 1, -1, 0)
    # split vs non-split: no rational equivalence
    assert find_gl2_equivalence(BinaryCubic(0, 2, 0, -1), BinaryCubic(0, 1, -1, 0)) is None


def test_parse():
    assert BinaryCubic.parse("1, -1/2, 0, 3") == BinaryCubic(1, F(-1, 2), 0, 3)
    with pytest.raises(ValueError):
        BinaryCubic.parse("1,2,3")


def test_non_associative_table_is_rejected():
    bad = CubicRing(BinaryCubic(0, 0, 0, 0), {(1, 1): (0, 0, 1), (2, 2): (0, 0, 0), (1, 2): (0, 1, 0), (2, 1): (0, 1, 0)})
    assert not bad.is_associative()


def test_pairing_examples():
    assert vh_pairing(VHVector(1, 0, 0, 0), VHVector(0, 0, 0, 1)) == 1
    v = VHVector(1, 2, 3, 4)
    assert vh_pairing(v, v) == 0


def test_psi_D_examples():
    u3 = psi_D_data("U3", 1)
    assert u3.value({"u22": 1, "u33": 1}) == 0
    up = psi_D_data("UP", 3)
    assert up.value({"v1": 1}) == 1
    with pytest.raises(ValueError):
        psi_D_data("U3", 0)


@settings(max_examples=200, deadline=None)
@given(forms)
def test_structure_constants_formula(f):
    a, b, c, d = f.coeffs
    R = cubic_ring(f, check=False)
    assert R.ij == (-a * d, 0, 0)
    assert R.i_squared == (-a * c, b, -a)
    assert R.j_squared == (-b * d, d, -c)
    assert R.is_associative()
    assert R.index_form() == f.scale(-1)


@settings(max_examples=200, deadline=None)
@given(mats, forms)
def test_discriminant_covariance(g, f):
    assert discriminant(gl2_act(g, f)) == det2(g) ** 2 * discriminant(f)
    if is_etale(f):
        assert square_class_of_disc(gl2_act(g, f)) == square_class_of_disc(f)


@settings(max_examples=100, deadline=None)
@given(mats, forms)
def test_rings_of_equivalent_forms_are_isomorphic(g, f):
    assert transported_table(f, g) == cubic_ring(gl2_act(g, f), check=False).table


@settings(max_examples=100, deadline=None)
@given(mats, mats, forms)
def test_action_is_a_group_action(g, h, f):
    # (g.f)(v) = det(g)^-1 f(v g), so h.(g.f) = (h g).f
    hg = [[sum(h[i][k] * g[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert gl2_act(h, gl2_act(g, f)) == gl2_act(hg, f)


roots = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), roots, roots, roots)
def test_discriminant_matches_root_oracle(a, r1, r2, r3):
    # f = a (x - r1 y)(x - r2 y)(x - r3 y): disc = a^4 prod (ri - rj)^2
    s1 = r1 + r2 + r3
    s2 = r1 * r2 + r1 * r3 + r2 * r3
    s3 = r1 * r2 * r3
    f = BinaryCubic(a, -a * s1, a * s2, -a * s3)
    want = a**4 * ((r1 - r2) * (r1 - r3) * (r2 - r3)) ** 2
    assert discriminant(f) == want


@settings(max_examples=100, deadline=None)
@given(st.tuples(ints, ints, ints, ints), st.tuples(ints, ints, ints, ints))
def test_pairing_is_alternating(v, w):
    v, w = VHVector(*v), VHVector(*w)
    assert vh_pairing(v, w) == -vh_pairing(w, v)


@settings(max_examples=100, deadline=None)
@given(forms)
def test_nondegenerate_iff_etale(f):
    assert psi_v_nondegenerate(f) == (discriminant(f) != 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(-30, 30).filter(lambda n: n != 0))
def test_sqrt_family_square_class(D):
    assert square_class_of_disc(BinaryCubic(1, 0, -D, 0)) == square_free_part(D)
