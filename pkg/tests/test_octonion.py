from fractions import Fraction

from hypothesis import given, settings, strategies as st

from octlie.exactmath import LaurentPoly
from octlie.octonion import (
    BASIS,
    Octonion,
    conj,
    from_v7,
    is_trace_zero,
    multiplication_table,
    mul,
    norm,
    to_v7,
    trace,
    trace_pairing,
)

# ---------------------------------------------------------------------------
# Independent model: Zorn vector matrices (a, v; w, b) with
#   (a, v, w, b)(a', v', w', b') =
#     (a a' + v.w', a v' + b' v + w x w', a' w + b w' - v x v', b b' + w.v').
# s4 = (1,0;0,0), t4 = (0,0;0,1), s_i = (0,e_i;0,0), t_i = (0,0;e_i,0).


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def zorn_mul(x, y):
    a, v, w, b = x
    a2, v2, w2, b2 = y
    return (
        a * a2 + _dot(v, w2),
        tuple(a * p + b2 * q + r for p, q, r in zip(v2, v, _cross(w, w2))),
        tuple(a2 * p + b * q - r for p, q, r in zip(w, w2, _cross(v, v2))),
        b * b2 + _dot(w, v2),
    )


def to_zorn(x: Octonion):
    c = x.coords
    return (c[6], (c[0], c[1], c[2]), (c[3], c[4], c[5]), c[7])


def from_zorn(z) -> Octonion:
    a, v, w, b = z
    return Octonion([v[0], v[1], v[2], w[0], w[1], w[2], a, b])


def zorn_norm(z):
    a, v, w, b = z
    return a * b - _dot(v, w)


# Frozen from the Zorn model (row times column).
ORACLE_TABLE = {
    "s1": ["0", "-t3", "t2", "s4", "0", "0", "0", "s1"],
    "s2": ["t3", "0", "-t1", "0", "s4", "0", "0", "s2"],
    "s3": ["-t2", "t1", "0", "0", "0", "s4", "0", "s3"],
    "t1": ["t4", "0", "0", "0", "s3", "-s2", "t1", "0"],
    "t2": ["0", "t4", "0", "-s3", "0", "s1", "t2", "0"],
    "t3": ["0", "0", "t4", "s2", "-s1", "0", "t3", "0"],
    "s4": ["s1", "s2", "s3", "0", "0", "0", "s4", "0"],
    "t4": ["0", "0", "0", "t1", "t2", "t3", "0", "t4"],
}


def _read(entry):
    if entry == "0":
        return Octonion.zero()
    if entry.startswith("-"):
        return -Octonion.basis(entry[1:])
    return Octonion.basis(entry)


def test_oracle_table_is_the_zorn_product():
    for r in BASIS:
        for c, entry in zip(BASIS, ORACLE_TABLE[r]):
            z = zorn_mul(to_zorn(Octonion.basis(r)), to_zorn(Octonion.basis(c)))
            assert from_zorn(z) == _read(entry), (r, c)


def test_all_64_products_match_the_frozen_table():
    table = multiplication_table()
    assert len(table) == 64
    for r in BASIS:
        for c, entry in zip(BASIS, ORACLE_TABLE[r]):
            assert table[(r, c)] == entry
            assert mul(Octonion.basis(r), Octonion.basis(c)) == _read(entry)


def test_displayed_products():
    assert mul(Octonion.basis("s1"), Octonion.basis("s2")) == -Octonion.basis("t3")
    assert mul(Octonion.basis("t1"), Octonion.basis("s1")) == Octonion.basis("t4")
    assert not mul(Octonion.basis("s4"), Octonion.basis("t4"))


def test_trace_and_norm_values():
    s4, t4 = Octonion.basis("s4"), Octonion.basis("t4")
    assert trace(s4) == 1
    assert trace(s4 - t4) == 0
    assert norm(s4 - t4) == -1
    assert conj(s4) == t4


def test_symbolic_norm():
    D = LaurentPoly.var(("D",), "D")
    x = Octonion.basis("s2") + Octonion.basis("t2", D)
    assert norm(x) == -D


def test_trace_pairing_values():
    b = Octonion.basis
    assert trace_pairing(b("s1"), b("t1")) == -1
    assert trace_pairing(b("s1"), b("s2")) == 0
    assert trace_pairing(b("t3"), b("s2") + b("t2", Fraction(5))) == 0


def test_v7_roundtrip():
    x = Octonion([1, 2, 3, 4, 5, 6, 7, -7])
    assert is_trace_zero(x)
    assert from_v7(to_v7(x)) == x


coord = st.fractions(min_value=-5, max_value=5, max_denominator=4)
octonions = st.lists(coord, min_size=8, max_size=8).map(Octonion)


@settings(max_examples=150, deadline=None)
@given(octonions, octonions)
def test_product_agrees_with_zorn_model(x, y):
    assert mul(x, y) == from_zorn(zorn_mul(to_zorn(x), to_zorn(y)))
    assert norm(x) == zorn_norm(to_zorn(x))


@settings(max_examples=100, deadline=None)
@given(octonions, octonions)
def test_composition_and_alternativity(x, y):
    assert norm(mul(x, y)) == norm(x) * norm(y)
    assert mul(x, mul(x, y)) == mul(mul(x, x), y)
    assert mul(mul(x, y), y) == mul(x, mul(y, y))


@settings(max_examples=100, deadline=None)
@given(octonions, octonions, octonions)
def test_trace_identities(x, y, z):
    one = Octonion.one()
    assert trace(mul(x, y)) == trace(mul(y, x))
    assert trace(mul(x, mul(y, z))) == trace(mul(mul(x, y), z))
    assert x + conj(x) == one.scale(trace(x))
    assert mul(x, conj(x)) == one.scale(norm(x))
    assert conj(mul(x, y)) == mul(conj(y), conj(x))


@settings(max_examples=50, deadline=None)
@given(octonions)
def test_identity_is_two_sided(x):
    one = Octonion.one()
    assert mul(one, x) == x == mul(x, one)
